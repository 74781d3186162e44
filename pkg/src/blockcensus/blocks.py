"""p-block theory on top of exact character tables.

Block membership is decided by the classical central-character criterion:
chi and psi share a p-block iff the reductions of their central characters
omega(K^) = |K| chi(g_K) / chi(1) agree modulo a fixed maximal ideal over
p, on every class sum.  The omega values are computed exactly in Z[zeta_n]
first (so characters of degree divisible by p need no special casing) and
only then reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .chartab import CharacterTable, ClassFunction, inflate, sigma_fixed
from .cyclo import Cyclotomic, GaloisElement, ResidueField, make_residue_field, reduce_mod_p
from .errors import InternalInvariantError, PreconditionError
from .permgrp import PermGroup, Quotient, class_fusion, nu_p

__all__ = [
    "Block",
    "BlockPartition",
    "CentralCharacter",
    "central_character",
    "block_partition",
    "principal_block",
    "height_zero_indices",
    "k0_sigma",
    "irr0_sigma_set",
    "induced_block",
    "dominated_block",
    "linear_twist_block",
]


@dataclass(frozen=True)
class CentralCharacter:
    """omega_chi on class sums: exact values and their residue-field images."""

    char_index: int
    values: tuple[Cyclotomic, ...]
    reduced: tuple


@dataclass(frozen=True)
class Block:
    """One p-block: character indices, defect, heights, residue signature."""

    p: int
    char_indices: tuple[int, ...]
    defect: int
    heights: tuple[int, ...]
    signature: tuple

    def __contains__(self, char_index: int) -> bool:
        return char_index in self.char_indices


@dataclass(frozen=True)
class BlockPartition:
    """The partition of Irr(G) into p-blocks."""

    p: int
    blocks: tuple[Block, ...]
    principal_index: int
    block_of: tuple[int, ...]
    rf: ResidueField

    @property
    def principal(self) -> Block:
        return self.blocks[self.principal_index]


def central_character(table: CharacterTable, i: int, rf: ResidueField) -> CentralCharacter:
    """Exact omega values for character i, plus their images under rf."""
    deg = table.degrees[i]
    values = []
    for j, size in enumerate(table.classes.sizes):
        try:
            values.append((size * table.values[i][j]).exact_div(deg))
        except InternalInvariantError as exc:  # pragma: no cover
            raise InternalInvariantError(f"central character of chi_{i} not integral: {exc}") from exc
    reduced = tuple(reduce_mod_p(v.lift(rf.n) if v.n != rf.n else v, rf) for v in values)
    return CentralCharacter(char_index=i, values=tuple(values), reduced=reduced)


def block_partition(table: CharacterTable, p: int, variant: int = 0) -> BlockPartition:
    """Partition Irr(G) into p-blocks via reduced central characters.

    ``variant`` selects an alternative maximal ideal over p; the resulting
    partition is provably identical for every choice (and tested to be).
    """
    cache_key = ("blocks", p, variant)
    cached = table.group._tables.get(cache_key)
    if cached is not None:
        return cached
    rf = make_residue_field(table.n, p, variant)
    signatures: dict[tuple, list[int]] = {}
    sig_order: list[tuple] = []
    for i in range(len(table)):
        cc = central_character(table, i, rf)
        if cc.reduced not in signatures:
            signatures[cc.reduced] = []
            sig_order.append(cc.reduced)
        signatures[cc.reduced].append(i)
    nu_g = nu_p(table.group.order, p)
    blocks = []
    block_of = [0] * len(table)
    for bi, sig in enumerate(sig_order):
        idxs = tuple(sorted(signatures[sig]))
        min_nu = min(nu_p(table.degrees[i], p) for i in idxs)
        defect = nu_g - min_nu
        heights = tuple(nu_p(table.degrees[i], p) - min_nu for i in idxs)
        if 0 not in heights:  # pragma: no cover
            raise InternalInvariantError("block without a height-zero character")
        blocks.append(Block(p=p, char_indices=idxs, defect=defect, heights=heights, signature=sig))
        for i in idxs:
            block_of[i] = bi
    partition = BlockPartition(
        p=p,
        blocks=tuple(blocks),
        principal_index=block_of[0],
        block_of=tuple(block_of),
        rf=rf,
    )
    table.group._tables[cache_key] = partition
    return partition


def principal_block(table: CharacterTable, p: int) -> Block:
    """The block containing the trivial character; its defect is nu_p(|G|)."""
    part = block_partition(table, p)
    blk = part.principal
    if blk.defect != nu_p(table.group.order, p):  # pragma: no cover
        raise InternalInvariantError("principal block defect != nu_p(|G|)")
    return blk


def height_zero_indices(table: CharacterTable, block: Block) -> tuple[int, ...]:
    """Characters of the block with p'-degree (equivalently height zero)."""
    return tuple(i for i, h in zip(block.char_indices, block.heights) if h == 0)


def irr0_sigma_set(table: CharacterTable, p: int, g: GaloisElement) -> tuple[int, ...]:
    """Indices of g-fixed height-zero characters of the principal p-block."""
    blk = principal_block(table, p)
    out = []
    for i in height_zero_indices(table, blk):
        if sigma_fixed(table.character(i), g):
            out.append(i)
    return tuple(out)


def k0_sigma(table: CharacterTable, p: int, g: GaloisElement) -> int:
    """Number of g-fixed height-zero characters in the principal p-block."""
    return len(irr0_sigma_set(table, p, g))


def induced_block(
    H: PermGroup,
    b: Block,
    tableH: CharacterTable,
    tableG: CharacterTable,
    p: int,
) -> Block | None:
    """Brauer induction b^G, or None when it is not defined.

    For each class sum K^ of G, the induced central value is the reduced
    image of the sum of omega_b over the H-classes contained in K; b^G is
    the unique G-block whose signature matches on every class, when one
    exists.
    """
    G = tableG.group
    partG = block_partition(tableG, p)
    rf = partG.rf
    cdG = tableG.classes
    cdH = tableH.classes
    fusion = class_fusion(G, H, cdG, cdH)
    psi = b.char_indices[0]
    ccH = central_character(tableH, psi, make_residue_field(tableH.n, p))
    # work with exact values lifted into Z[zeta_{nG-compatible}] and reduce in G's field
    m = rf.n
    for v in ccH.values:
        if m % v.n != 0:
            m = m // gcd(m, v.n) * v.n
    if m != rf.n:  # exponent(H) divides exponent(G), so this cannot happen
        raise InternalInvariantError("subgroup exponent does not divide the parent exponent")
    zero = rf.field.zero
    induced_sig = []
    for k in range(len(cdG)):
        acc = zero
        for l, target in enumerate(fusion):
            if target == k:
                acc = rf.field.add(acc, reduce_mod_p(ccH.values[l].lift(rf.n), rf))
        induced_sig.append(acc)
    induced_sig = tuple(induced_sig)
    for blk in partG.blocks:
        if blk.signature == induced_sig:
            return blk
    return None


def dominated_block(
    tableG: CharacterTable,
    quotient: Quotient,
    tableQ: CharacterTable,
    Bbar: Block,
    p: int,
) -> Block:
    """The G-block containing the inflations of Irr(Bbar), Bbar a block of G/N.

    Block domination is well defined: all inflations land in one block, and
    a breach raises InternalInvariantError.
    """
    partG = block_partition(tableG, p)
    found = None
    for i in Bbar.char_indices:
        lifted = inflate(tableQ.character(i), quotient)
        row = tableG.find_row(lifted.values)
        if row is None:  # pragma: no cover
            raise InternalInvariantError("inflated irreducible missing from the parent table")
        bi = partG.block_of[row]
        if found is None:
            found = bi
        elif found != bi:
            raise InternalInvariantError("inflations of one quotient block landed in distinct blocks")
    assert found is not None
    return partG.blocks[found]


def linear_twist_block(table: CharacterTable, p: int, xi: ClassFunction, B: Block) -> Block:
    """The block {xi * chi : chi in B} for a linear character xi of G."""
    if xi.degree() != 1:
        raise PreconditionError("twisting character must be linear")
    part = block_partition(table, p)
    image = []
    for i in B.char_indices:
        row = table.find_row((xi * table.character(i)).values)
        if row is None:  # pragma: no cover
            raise InternalInvariantError("twist of an irreducible is not in the table")
        image.append(row)
    key = tuple(sorted(image))
    for blk in part.blocks:
        if blk.char_indices == key:
            return blk
    raise InternalInvariantError("linear twist of a block is not a block")
