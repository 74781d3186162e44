"""Exact complex character tables and class-function operations.

Tables are computed by the classical three-step finite-field method:
class-multiplication matrices from orbit counting, simultaneous
diagonalization over F_ell for a prime ell == 1 (mod exponent) with
ell > 2*sqrt(|G|), and an exact lift of each value into Z[zeta_n] through
the root-of-unity multiplicity sums.  Row orthogonality then holds on the
nose, with no tolerances anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from . import _gfl
from .cyclo import Cyclotomic, GaloisElement
from .errors import InputError, InternalInvariantError, PreconditionError
from .permgrp import (
    ClassData,
    PermGroup,
    Permutation,
    Quotient,
    class_fusion,
    conjugacy_classes,
    subgroup_from_elements,
)

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "character_table",
    "restrict",
    "induce",
    "inner_product",
    "inflate",
    "kernel",
    "sigma_fixed",
    "determinantal_order",
    "validate_character_table",
]


@dataclass(frozen=True)
class ClassFunction:
    """A function constant on conjugacy classes, as one value per class."""

    group: PermGroup
    classes: ClassData
    values: tuple[Cyclotomic, ...]

    def degree(self) -> Cyclotomic:
        return self.values[0]

    def values_key(self, modulus: int) -> tuple:
        return tuple(v.coeff_key(modulus) for v in self.values)

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if self.classes is not other.classes:
            raise PreconditionError("class functions live on different groups")
        return ClassFunction(self.group, self.classes, tuple(a * b for a, b in zip(self.values, other.values)))


@dataclass(frozen=True)
class CharacterTable:
    """All irreducible complex characters of a group, exactly.

    Rows are indexed by character, columns by conjugacy class (class 0 is
    the identity).  Row 0 is the trivial character; the rest are sorted by
    (degree, value vector).  n is the group exponent and every value lives
    in Z[zeta_n].
    """

    group: PermGroup
    classes: ClassData
    n: int
    values: tuple[tuple[Cyclotomic, ...], ...]
    degrees: tuple[int, ...]
    _row_keys: dict = field(default_factory=dict, repr=False, hash=False, compare=False)

    def __len__(self) -> int:
        return len(self.values)

    def character(self, i: int) -> ClassFunction:
        return ClassFunction(self.group, self.classes, self.values[i])

    def characters(self) -> list[ClassFunction]:
        return [self.character(i) for i in range(len(self.values))]

    def find_row(self, values) -> int | None:
        """Index of the character with the given values (math equality)."""
        vals = list(values)
        m = self.n
        for v in vals:
            m = m // gcd(m, v.n) * v.n
        keys = self._row_keys.get(m)
        if keys is None:
            keys = {tuple(v.coeff_key(m) for v in row): i for i, row in enumerate(self.values)}
            self._row_keys[m] = keys
        return keys.get(tuple(v.coeff_key(m) for v in vals))


def _dixon_prime(order: int, exp: int) -> int:
    ell = exp + 1
    while True:
        if ell > 2 and ell * ell > 4 * order and _is_prime(ell):
            return ell
        ell += exp


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def _class_matrix(cd: ClassData, i: int) -> np.ndarray:
    """Transposed class-multiplication matrix: row action v -> v*A has the
    central-character vectors as its common eigen rows."""
    r = len(cd)
    m = np.zeros((r, r), dtype=np.int64)
    class_of = cd.class_of
    reps = cd.reps
    for x in cd.members[i]:
        xi = x.inverse()
        for k in range(r):
            j = class_of[xi * reps[k]]
            m[j, k] += 1
    return m.T.copy()


def _split_spaces(cd: ClassData, ell: int) -> list[np.ndarray]:
    """Common eigen rows of all class matrices over F_ell (one per character)."""
    r = len(cd)
    spaces: list[tuple[np.ndarray, list[int]]] = [(np.eye(r, dtype=np.int64), list(range(r)))]

    def refine(with_matrix: np.ndarray) -> None:
        nonlocal spaces
        out = []
        for s, pivots in spaces:
            d = s.shape[0]
            if d == 1:
                out.append((s, pivots))
                continue
            sa = _gfl.matmul(s, with_matrix, ell)
            t = sa[:, pivots]
            evs = _gfl.eigenvalues(t, ell)
            if len(evs) == 1:
                out.append((s, pivots))
                continue
            total = 0
            for lam in evs:
                b = (t - lam * np.eye(d, dtype=np.int64)) % ell
                nsp = _gfl.nullspace_rows(b, ell)
                if nsp.shape[0] == 0:
                    continue
                total += nsp.shape[0]
                sub = _gfl.matmul(nsp, s, ell)
                red, piv = _gfl.rref(sub, ell)
                out.append((red, piv))
            if total != d:  # pragma: no cover
                raise InternalInvariantError("class matrix not diagonalizable over F_ell")
        spaces = out

    for i in range(1, r):
        if len(spaces) == r:
            break
        refine(_class_matrix(cd, i))

    if len(spaces) != r:
        # Deterministic fallback: pseudo-random integer combinations of the
        # class matrices, seeded from the group order.
        rng = random.Random(cd.group.order)
        mats = [_class_matrix(cd, i) for i in range(1, r)]
        for _ in range(20):
            if len(spaces) == r:
                break
            combo = sum(rng.randrange(1, ell) * m for m in mats) % ell
            refine(combo.astype(np.int64))
    if len(spaces) != r:  # pragma: no cover
        raise InternalInvariantError("character space did not split completely")
    return [s for s, _ in spaces]


def _dft_matrix(m: int, x: int, ell: int) -> np.ndarray:
    """Inverse-DFT matrix over F_ell: entry [k, s] = x^(-ks) / m."""
    minv = pow(m, -1, ell)
    xinv = pow(x, -1, ell)
    rows = np.zeros((m, m), dtype=np.int64)
    for k in range(m):
        w = pow(xinv, k, ell)
        v = 1
        for s in range(m):
            rows[k, s] = v * minv % ell
            v = v * w % ell
    return rows


def character_table(G: PermGroup) -> CharacterTable:
    """The full character table, computed exactly (see module docstring)."""
    cached = G._tables.get("table")
    if cached is not None:
        return cached
    cd = conjugacy_classes(G)
    r = len(cd)
    n = cd.exponent
    if r == 1:
        table = CharacterTable(G, cd, 1, ((Cyclotomic.from_int(1, 1),),), (1,))
        G._tables["table"] = table
        return table
    ell = _dixon_prime(G.order, n)
    spaces = _split_spaces(cd, ell)

    sizes = np.array(cd.sizes, dtype=np.int64)
    inv_sizes = np.array([pow(int(s), -1, ell) for s in cd.sizes], dtype=np.int64)
    invmap = list(cd.inverse_map)
    order_mod = G.order % ell

    # x: fixed element of order n in F_ell; primitive-root search is exact.
    g0 = 2
    while True:
        if _order_mod(g0, ell) == ell - 1:
            break
        g0 += 1
    x = pow(g0, (ell - 1) // n, ell)

    rep_orders = cd.rep_orders()
    dft_cache: dict[int, np.ndarray] = {}

    rows = []
    for s in spaces:
        v = s[0] % ell
        if v[0] == 0:  # pragma: no cover
            raise InternalInvariantError("eigen row vanishes on the identity class")
        v = v * pow(int(v[0]), -1, ell) % ell  # now v[j] = |C_j| chi(g_j)/chi(1)
        y = v * inv_sizes % ell                # chi(g_j)/chi(1)
        dot = int(sum(int(v[j]) * int(y[invmap[j]]) for j in range(r)) % ell)
        d2 = order_mod * pow(dot, -1, ell) % ell
        deg = None
        for cand in range(1, (ell - 1) // 2 + 1):
            if cand * cand % ell == d2:
                deg = cand
                break
        if deg is None:  # pragma: no cover
            raise InternalInvariantError("character degree is not a square mod ell")
        vals_mod = [int(y[j]) * deg % ell for j in range(r)]

        values = []
        for j in range(r):
            m = rep_orders[j]
            dft = dft_cache.get(m)
            if dft is None:
                dft = _dft_matrix(m, pow(x, n // m, ell), ell)
                dft_cache[m] = dft
            powers = np.array([vals_mod[cd.power_map[j][si]] for si in range(m)], dtype=np.int64)
            mults = (dft @ powers) % ell
            if any(int(mu) > (ell - 1) // 2 for mu in mults):  # pragma: no cover
                raise InternalInvariantError("root multiplicity exceeded the lifting bound")
            if int(mults.sum()) != deg:  # pragma: no cover
                raise InternalInvariantError("root multiplicities do not sum to the degree")
            coeffs = [0] * n
            step = n // m
            for k in range(m):
                mu = int(mults[k])
                if mu:
                    coeffs[(k * step) % n] += mu
            values.append(Cyclotomic(n, coeffs))
        rows.append((deg, values))

    one = Cyclotomic.from_int(1, n)

    def sort_key(row):
        deg, values = row
        is_trivial = all(v == one for v in values)
        return (deg, 0 if is_trivial else 1, tuple(v.coeffs for v in values))

    rows.sort(key=sort_key)
    degrees = tuple(deg for deg, _ in rows)
    if sum(d * d for d in degrees) != G.order:  # pragma: no cover
        raise InternalInvariantError("degree squares do not sum to the group order")
    table = CharacterTable(G, cd, n, tuple(tuple(vals) for _, vals in rows), degrees)
    G._tables["table"] = table
    return table


def _order_mod(a: int, ell: int) -> int:
    k, x = 1, a % ell
    while x != 1:
        x = x * a % ell
        k += 1
    return k


# -- class-function operations ----------------------------------------------


def restrict(chi: ClassFunction, H: PermGroup) -> ClassFunction:
    """Restriction along H <= G, via class fusion."""
    G = chi.group
    cdH = conjugacy_classes(H)
    fusion = class_fusion(G, H, chi.classes, cdH)
    return ClassFunction(H, cdH, tuple(chi.values[fusion[l]] for l in range(len(cdH))))


def induce(theta: ClassFunction, G: PermGroup) -> ClassFunction:
    """Induction from H = theta.group up to G (exact division throughout)."""
    H = theta.group
    cdG = conjugacy_classes(G)
    cdH = theta.classes
    fusion = class_fusion(G, H, cdG, cdH)
    values = []
    for k in range(len(cdG)):
        acc = Cyclotomic.from_int(0, 1)
        for l, target in enumerate(fusion):
            if target == k:
                acc = acc + cdH.sizes[l] * theta.values[l]
        num = G.order * acc
        values.append(num.exact_div(H.order * cdG.sizes[k]))
    return ClassFunction(G, cdG, tuple(values))


def inner_product(alpha: ClassFunction, beta: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum |K| alpha(g_K) conj(beta(g_K)), exactly.

    Both arguments must live in the character ring (all of this module's
    outputs do), where conj(beta(g)) = beta(g^{-1}); that identity lets the
    conjugate come from the inverse-class column.
    """
    if alpha.classes is not beta.classes:
        raise PreconditionError("inner product of class functions on different groups")
    cd = alpha.classes
    invmap = cd.inverse_map
    m = 1
    for v in alpha.values:
        m = m // gcd(m, v.n) * v.n
    for v in beta.values:
        m = m // gcd(m, v.n) * v.n
    acc = [0] * m
    for k in range(len(cd)):
        a = alpha.values[k].coeff_key(m)
        b = beta.values[invmap[k]].coeff_key(m)
        w = cd.sizes[k]
        for e1, c1 in enumerate(a):
            if c1:
                wc1 = w * c1
                for e2, c2 in enumerate(b):
                    if c2:
                        acc[(e1 + e2) % m] += wc1 * c2
    total = Cyclotomic(m, acc)
    return total.exact_div(alpha.group.order)


def inflate(chibar: ClassFunction, quotient: Quotient) -> ClassFunction:
    """Lift a class function on G/N back to G through the projection."""
    G = quotient.parent
    cdG = conjugacy_classes(G)
    cdQ = chibar.classes
    if chibar.group is not quotient.group:
        raise PreconditionError("class function does not live on the given quotient")
    values = []
    for rep in cdG.reps:
        q = quotient.project(rep)
        values.append(chibar.values[cdQ.class_of[q]])
    return ClassFunction(G, cdG, tuple(values))


def kernel(chi: ClassFunction) -> PermGroup:
    """Subgroup generated by the classes where chi takes its degree value."""
    deg = chi.degree()
    elems: list[Permutation] = []
    for j, v in enumerate(chi.values):
        if v == deg:
            elems.extend(chi.classes.members[j])
    return subgroup_from_elements(chi.group.degree, elems)


def sigma_fixed(chi: ClassFunction, g: GaloisElement) -> bool:
    """Whether chi is fixed by zeta -> zeta^m, by the power-map criterion
    chi(x^m) == chi(x) on all classes."""
    exp = chi.classes.exponent
    if exp == 1:
        return True
    m = g.m % exp
    if gcd(m, exp) != 1:
        raise InputError(f"Galois exponent {g.m} is not invertible modulo the group exponent {exp}")
    pm = chi.classes.power_map
    vals = chi.values
    return all(vals[pm[j][m]] == vals[j] for j in range(len(vals)))


def power_map_character(chi: ClassFunction, m: int) -> ClassFunction:
    """The class function x -> chi(x^m)."""
    exp = chi.classes.exponent
    pm = chi.classes.power_map
    return ClassFunction(chi.group, chi.classes, tuple(chi.values[pm[j][m % exp]] for j in range(len(chi.values))))


def determinantal_order(chi: ClassFunction) -> int:
    """Order of det(chi): the linear character of determinants.

    Per class, the eigenvalue product is the top elementary symmetric
    function of the eigenvalue multiset, recovered from the power sums
    chi(g^s) by Newton's identities (all divisions exact in Z[zeta]).
    """
    d = chi.degree().as_int()
    cd = chi.classes
    exp = cd.exponent
    out = 1
    for j in range(len(chi.values)):
        o = cd.reps[j].order()
        psums = [chi.values[cd.power_map[j][s % exp]] for s in range(1, d + 1)]
        es = [Cyclotomic.from_int(1, 1)]
        for k in range(1, d + 1):
            acc = Cyclotomic.from_int(0, 1)
            sign = 1
            for i in range(1, k + 1):
                term = es[k - i] * psums[i - 1]
                acc = acc + (term if sign > 0 else -term)
                sign = -sign
            es.append(acc.exact_div(k))
        det_j = es[d]
        t = _root_order(det_j, o)
        out = out * t // gcd(out, t)
    return out


def _root_order(v: Cyclotomic, bound: int) -> int:
    one = Cyclotomic.from_int(1, 1)
    for t in sorted(_divisors(bound)):
        if v ** t == one:
            return t
    raise InternalInvariantError(f"{v} is not a root of unity of order dividing {bound}")


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return out


def _convolution_sum(pairs, weights, n: int) -> Cyclotomic:
    """sum_k w_k * a_k * b_k with raw accumulation over nonzero supports
    (the two sides of each pair are (support, support) lists of (e, c))."""
    acc = [0] * n
    for (sa, sb), w in zip(pairs, weights):
        for e1, c1 in sa:
            wc1 = w * c1
            for e2, c2 in sb:
                acc[(e1 + e2) % n] += wc1 * c2
    return Cyclotomic(n, acc)


def validate_character_table(table: CharacterTable) -> None:
    """Exact structural checks: first/second orthogonality, degree sums.

    Raises InternalInvariantError on any breach; used by the test and
    acceptance suites (construction already asserts the cheap parts).
    """
    G = table.group
    r = len(table)
    n = table.n
    if r != len(table.classes):
        raise InternalInvariantError("character count != class count")
    if sum(d * d for d in table.degrees) != G.order:
        raise InternalInvariantError("sum of squared degrees != |G|")
    for d in table.degrees:
        if G.order % d != 0:
            raise InternalInvariantError(f"degree {d} does not divide |G|")
    sizes = table.classes.sizes
    invmap = table.classes.inverse_map
    supp = [[tuple((e, c) for e, c in enumerate(v.coeffs) if c) for v in row] for row in table.values]
    for i in range(r):
        for j in range(i, r):
            pairs = [(supp[i][k], supp[j][invmap[k]]) for k in range(r)]
            ip = _convolution_sum(pairs, sizes, n).exact_div(G.order)
            expected = 1 if i == j else 0
            if ip != expected:
                raise InternalInvariantError(f"row orthogonality fails at ({i}, {j}): {ip}")
    # column orthogonality: sum_chi chi(g_K) conj(chi(g_L)) = delta_KL |C_G(g_K)|
    ones = [1] * r
    for k in range(r):
        for l in range(r):
            pairs = [(supp[i][k], supp[i][invmap[l]]) for i in range(r)]
            acc = _convolution_sum(pairs, ones, n)
            expected = G.order // sizes[k] if k == l else 0
            if acc != expected:
                raise InternalInvariantError(f"column orthogonality fails at ({k}, {l})")
