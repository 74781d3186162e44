"""Exact permutation-group machinery sized for desk-scale groups.

Groups are given by generators on ``{0, ..., degree-1}`` and carry a
deterministic stabilizer chain (base points are always the smallest moved
point), so orders, membership tests and element enumeration are exact and
reproducible run to run.  The subgroup constructions consumed by the
block-theoretic checks (Sylow subgroups, normalizers, centralizers,
Frattini subgroups, O_{p'}, normal-subgroup enumeration, quotients) work
at the element level and assume the full element list fits comfortably in
memory; nothing here is meant for groups much beyond order ~5000.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import InputError, InternalInvariantError, PreconditionError

__all__ = [
    "Permutation",
    "PermGroup",
    "ClassData",
    "Quotient",
    "build_group",
    "trivial_group",
    "conjugacy_classes",
    "sylow_subgroup",
    "frattini_subgroup",
    "frattini_index",
    "normalizer",
    "centralizer",
    "o_p_prime",
    "derived_subgroup",
    "normal_closure",
    "is_cyclic",
    "exponent",
    "is_perfect",
    "is_solvable",
    "normal_subgroups",
    "normal_subgroup_class_sets",
    "class_fusion",
    "subgroup_from_elements",
    "quotient_group",
    "direct_product",
]

# Full element enumeration is used throughout; refuse anything far beyond
# the supported scale instead of silently grinding.
_ELEMENT_LIMIT = 1_000_000


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def nu_p(n: int, p: int) -> int:
    """p-adic valuation of n."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class Permutation:
    """A permutation of {0, ..., d-1} stored as its image tuple.

    Products apply left to right: ``(p * q)(x) == q(p(x))``.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        p = object.__new__(cls)
        p.images = tuple(range(degree))
        return p

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        """Build a permutation from disjoint cycles given as point lists."""
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @classmethod
    def _unsafe(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        return p

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        q = other.images
        return Permutation._unsafe(tuple(q[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._unsafe(tuple(inv))

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(len(self.images))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def apply(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def min_moved(self) -> int | None:
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def order(self) -> int:
        n = 1
        for cycle in self.cycles():
            n = _lcm(n, len(cycle))
        return n

    def cycles(self) -> list[list[int]]:
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cycle = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(cycle)
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


class _Level:
    """One stabilizer-chain level: base point, strong generators, transversal."""

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {}

    def rebuild(self, degree: int) -> None:
        ident = Permutation.identity(degree)
        self.transversal = {self.point: ident}
        queue = [self.point]
        while queue:
            a = queue.pop(0)
            u_a = self.transversal[a]
            for g in self.gens:
                b = g.images[a]
                if b not in self.transversal:
                    self.transversal[b] = u_a * g
                    queue.append(b)


class PermGroup:
    """A permutation group with a verified deterministic stabilizer chain."""

    def __init__(self, degree: int, generators):
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise InputError(f"generator degree {g.degree} != group degree {degree}")
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._chain = _build_chain(degree, gens)
        order = 1
        for lvl in self._chain:
            order *= len(lvl.transversal)
        self.order = order
        self._elements: tuple[Permutation, ...] | None = None
        self._classes: ClassData | None = None
        self._tables: dict = {}

    # -- membership ---------------------------------------------------

    def sift(self, g: Permutation) -> Permutation:
        """Residue of g after stripping through the chain (identity iff g in G)."""
        for lvl in self._chain:
            x = g.images[lvl.point]
            if x == lvl.point:
                continue
            u = lvl.transversal.get(x)
            if u is None:
                return g
            g = g * u.inverse()
        return g

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        return self.sift(g).is_identity()

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    # -- enumeration ---------------------------------------------------

    def elements(self) -> tuple[Permutation, ...]:
        """All group elements, deterministic order, cached."""
        if self._elements is None:
            if self.order > _ELEMENT_LIMIT:
                raise PreconditionError(f"group order {self.order} beyond element-enumeration scale")
            elems = [Permutation.identity(self.degree)]
            for lvl in reversed(self._chain):
                new = []
                for a in sorted(lvl.transversal):
                    u = lvl.transversal[a]
                    for h in elems:
                        new.append(h * u)
                elems = new
            self._elements = tuple(elems)
        return self._elements

    def element_set(self) -> frozenset:
        return frozenset(p.images for p in self.elements())

    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self._chain)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order}, ngens={len(self.generators)})"


def _build_chain(degree: int, gens: list[Permutation]) -> list[_Level]:
    nontrivial = [g for g in gens if not g.is_identity()]
    if not nontrivial:
        return []
    levels: list[_Level] = []
    b0 = min(g.min_moved() for g in nontrivial)
    first = _Level(b0)
    seen = set()
    for g in nontrivial:
        if g.images not in seen:
            seen.add(g.images)
            first.gens.append(g)
    levels.append(first)
    _close(levels, 0, degree)
    return levels


def _sift_from(levels: list[_Level], g: Permutation, start: int) -> tuple[Permutation, int]:
    """Strip g through levels[start:]; returns (residue, level index where stuck)."""
    for i in range(start, len(levels)):
        lvl = levels[i]
        x = g.images[lvl.point]
        if x == lvl.point:
            continue
        u = lvl.transversal.get(x)
        if u is None:
            return g, i
        g = g * u.inverse()
    return g, len(levels)


def _close(levels: list[_Level], i: int, degree: int) -> None:
    """Complete level i, assuming all deeper levels are complete.

    Sifts every Schreier generator of level i; residues become new strong
    generators further down and the affected levels are re-closed deepest
    first (textbook deterministic Schreier-Sims).
    """
    lvl = levels[i]
    lvl.rebuild(degree)
    orbit = sorted(lvl.transversal)
    for a in orbit:
        u_a = lvl.transversal[a]
        for s in lvl.gens:
            b = s.images[a]
            sg = u_a * s * levels[i].transversal[b].inverse()
            if sg.is_identity():
                continue
            h, j = _sift_from(levels, sg, i + 1)
            if h.is_identity():
                continue
            if j == len(levels):
                levels.append(_Level(h.min_moved()))
            for l in range(i + 1, j + 1):
                levels[l].gens.append(h)
            for l in range(j, i, -1):
                _close(levels, l, degree)


def build_group(degree: int, generators) -> PermGroup:
    """Build a group from generators; the stabilizer chain makes the order exact."""
    return PermGroup(degree, generators)


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, [])


def subgroup_from_elements(degree: int, elements) -> PermGroup:
    """Group generated by (in practice: consisting of) the given elements.

    Scans elements in sorted order and keeps only the ones that enlarge the
    group, so the chain is built from a short generating set.
    """
    gens: list[Permutation] = []
    grp = trivial_group(degree)
    for x in sorted(elements):
        if x not in grp:
            gens.append(x)
            grp = PermGroup(degree, gens)
    return grp


def direct_product(groups: list[PermGroup]) -> PermGroup:
    """Direct product acting on the disjoint union of the factors' points."""
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for p in g.generators:
            images = list(range(degree))
            for i, j in enumerate(p.images):
                images[offset + i] = offset + j
            gens.append(Permutation(images))
        offset += g.degree
    return PermGroup(degree, gens)


# -- conjugacy classes ----------------------------------------------------


@dataclass(frozen=True)
class ClassData:
    """Conjugacy classes: representatives, sizes, power maps, fusion support.

    ``power_map[j][m]`` is the class of ``reps[j] ** m`` for every residue
    0 <= m < exponent (a superset of the coprime residues needed for the
    Galois action; the full map also drives character lifting).
    ``class_of`` indexes every group element.
    """

    group: PermGroup
    reps: tuple[Permutation, ...]
    sizes: tuple[int, ...]
    power_map: tuple[tuple[int, ...], ...]
    inverse_map: tuple[int, ...]
    exponent: int
    class_of: dict = field(repr=False, hash=False, compare=False)
    members: tuple = field(repr=False, hash=False, compare=False)

    def __len__(self) -> int:
        return len(self.reps)

    def power_class(self, j: int, m: int) -> int:
        return self.power_map[j][m % self.exponent]

    def rep_orders(self) -> tuple[int, ...]:
        return tuple(r.order() for r in self.reps)


def conjugacy_classes(G: PermGroup) -> ClassData:
    """Classes in a canonical order: identity first, then by least member."""
    if G._classes is not None:
        return G._classes
    elems = sorted(G.elements())
    gen_pairs = [(g, g.inverse()) for g in G.generators]
    class_of: dict[Permutation, int] = {}
    reps: list[Permutation] = []
    members: list[list[Permutation]] = []
    for p in elems:
        if p in class_of:
            continue
        ci = len(reps)
        reps.append(p)
        orbit = [p]
        class_of[p] = ci
        queue = [p]
        while queue:
            x = queue.pop()
            for g, ginv in gen_pairs:
                y = ginv * x * g
                if y not in class_of:
                    class_of[y] = ci
                    orbit.append(y)
                    queue.append(y)
        members.append(orbit)
    sizes = tuple(len(m) for m in members)
    if sum(sizes) != G.order:  # pragma: no cover
        raise InternalInvariantError(f"class sizes {sizes} do not sum to |G|={G.order}")
    exp = 1
    for r in reps:
        exp = _lcm(exp, r.order())
    power_map = []
    for r in reps:
        row = []
        x = Permutation.identity(G.degree)
        for _ in range(exp):
            row.append(class_of[x])
            x = x * r
        power_map.append(tuple(row))
    inverse_map = tuple(class_of[r.inverse()] for r in reps)
    cd = ClassData(
        group=G,
        reps=tuple(reps),
        sizes=sizes,
        power_map=tuple(power_map),
        inverse_map=inverse_map,
        exponent=exp,
        class_of=class_of,
        members=tuple(tuple(m) for m in members),
    )
    G._classes = cd
    return cd


def class_fusion(G: PermGroup, H: PermGroup, classesG: ClassData, classesH: ClassData) -> tuple[int, ...]:
    """For each H-class, the index of the G-class containing it."""
    if not H.is_subgroup_of(G):
        raise PreconditionError("H is not a subgroup of G")
    return tuple(classesG.class_of[r] for r in classesH.reps)


# -- standard subgroup constructions --------------------------------------


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """N_G(H) by element filtering (desk scale)."""
    if not H.is_subgroup_of(G):
        raise PreconditionError("H is not a subgroup of G")
    keep = []
    hgens = H.generators
    for g in G.elements():
        ginv = g.inverse()
        if all((ginv * h * g) in H for h in hgens):
            keep.append(g)
    return subgroup_from_elements(G.degree, keep)


def centralizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """C_G(H) by element filtering."""
    if not H.is_subgroup_of(G):
        raise PreconditionError("H is not a subgroup of G")
    keep = []
    hgens = H.generators
    for g in G.elements():
        if all(g * h == h * g for h in hgens):
            keep.append(g)
    return subgroup_from_elements(G.degree, keep)


def normal_closure(G: PermGroup, seeds) -> PermGroup:
    """Smallest normal subgroup of G containing the seed permutations."""
    gens = [s for s in seeds if not s.is_identity()]
    grp = subgroup_from_elements(G.degree, gens) if gens else trivial_group(G.degree)
    changed = True
    while changed:
        changed = False
        for g in G.generators:
            ginv = g.inverse()
            for s in list(grp.generators):
                c = ginv * s * g
                if c not in grp:
                    grp = PermGroup(G.degree, list(grp.generators) + [c])
                    changed = True
    return grp


def derived_subgroup(G: PermGroup) -> PermGroup:
    """Commutator subgroup, as the normal closure of generator commutators."""
    seeds = []
    for a in G.generators:
        for b in G.generators:
            c = a.inverse() * b.inverse() * a * b
            if not c.is_identity():
                seeds.append(c)
    return normal_closure(G, seeds)


def exponent(G: PermGroup) -> int:
    cd = conjugacy_classes(G)
    return cd.exponent


def is_cyclic(G: PermGroup) -> bool:
    cd = conjugacy_classes(G)
    return any(r.order() == G.order for r in cd.reps)


def is_perfect(G: PermGroup) -> bool:
    return derived_subgroup(G).order == G.order


def is_solvable(G: PermGroup) -> bool:
    """Derived series reaches the trivial group."""
    H = G
    while H.order > 1:
        D = derived_subgroup(H)
        if D.order == H.order:
            return False
        H = D
    return True


def sylow_subgroup(G: PermGroup, p: int) -> PermGroup:
    """A Sylow p-subgroup, grown by iterative p-element closure.

    Starting from a p-element, the current p-subgroup P is repeatedly
    extended by a p-element of N_G(P) \\ P (such an element exists while
    |P| < |G|_p because p divides |N_G(P) : P| then).
    """
    if p < 2 or any(p % q == 0 for q in range(2, p)):
        raise PreconditionError(f"{p} is not prime")
    target = p_part(G.order, p)
    if target == 1:
        return trivial_group(G.degree)
    P = None
    for x in sorted(G.elements()):
        o = x.order()
        if o % p == 0:
            y = x ** (o // p_part(o, p))
            P = PermGroup(G.degree, [y])
            break
    assert P is not None
    while P.order < target:
        N = normalizer(G, P)
        extended = False
        for x in sorted(N.elements()):
            o = x.order()
            y = x ** (o // p_part(o, p))
            if not y.is_identity() and y not in P:
                P = PermGroup(G.degree, list(P.generators) + [y])
                extended = True
                break
        if not extended:  # pragma: no cover
            raise InternalInvariantError(f"Sylow closure stalled for |G|={G.order}, p={p}")
    return P


def _is_p_group(P: PermGroup, p: int) -> bool:
    return P.order == p_part(P.order, p)


def frattini_subgroup(P: PermGroup, p: int) -> PermGroup:
    """Phi(P) = P' * P^p for a p-group P."""
    if not _is_p_group(P, p):
        raise PreconditionError("Frattini computation requires a p-group")
    if P.order == 1:
        return trivial_group(P.degree)
    derived = derived_subgroup(P)
    powers = sorted({x ** p for x in P.elements()})
    seeds = list(derived.generators) + [q for q in powers if not q.is_identity()]
    return subgroup_from_elements(P.degree, seeds)


def frattini_index(P: PermGroup, p: int) -> int:
    """|P : Phi(P)|; equals p^r with r the minimal generator count."""
    phi = frattini_subgroup(P, p)
    return P.order // phi.order


def o_p_prime(G: PermGroup, p: int) -> PermGroup:
    """O_{p'}(G): the largest normal subgroup of order coprime to p.

    Generated by the conjugacy classes whose normal closure is a p'-group
    (a product of normal p'-subgroups is again a normal p'-subgroup).
    """
    cd = conjugacy_classes(G)
    pieces = []
    for j, rep in enumerate(cd.reps):
        if j == 0 or rep.order() % p == 0:
            continue
        closure = subgroup_from_elements(G.degree, cd.members[j])
        if closure.order % p != 0:
            pieces.extend(cd.members[j])
    if not pieces:
        return trivial_group(G.degree)
    return subgroup_from_elements(G.degree, pieces)


# -- normal subgroup lattice ----------------------------------------------


def _product_support(cd: ClassData, i: int, j: int, cache: dict) -> frozenset:
    """Classes met by products x*y with x in class i, y in class j."""
    key = (i, j) if i <= j else (j, i)
    got = cache.get(key)
    if got is not None:
        return got
    rep = cd.reps[key[1]]
    out = frozenset(cd.class_of[x * rep] for x in cd.members[key[0]])
    cache[key] = out
    return out


def _class_closure(cd: ClassData, start: frozenset, cache: dict) -> frozenset:
    """Smallest product-closed class set containing start plus the identity class."""
    closed = set(start) | {0}
    queue = sorted(closed)
    while queue:
        i = queue.pop()
        for j in sorted(closed):
            for k in _product_support(cd, i, j, cache):
                if k not in closed:
                    closed.add(k)
                    queue.append(k)
    return frozenset(closed)


def normal_subgroup_class_sets(G: PermGroup) -> list[frozenset]:
    """All normal subgroups of G, as frozensets of class indices.

    Normal subgroups are exactly the product-closed unions of conjugacy
    classes; they are enumerated as joins of single-class closures.
    Sorted by (order, class indices).
    """
    cd = conjugacy_classes(G)
    cache: dict = {}
    irreducibles = set()
    for c in range(len(cd)):
        irreducibles.add(_class_closure(cd, frozenset([c]), cache))
    found = set(irreducibles)
    worklist = sorted(found, key=sorted)
    while worklist:
        a = worklist.pop()
        for b in list(found):
            if a <= b or b <= a:
                continue
            j = _class_closure(cd, a | b, cache)
            if j not in found:
                found.add(j)
                worklist.append(j)
    def order_of(s: frozenset) -> int:
        return sum(cd.sizes[c] for c in s)
    return sorted(found, key=lambda s: (order_of(s), sorted(s)))


def subgroup_from_class_set(G: PermGroup, class_set: frozenset) -> PermGroup:
    cd = conjugacy_classes(G)
    elems = []
    for c in sorted(class_set):
        elems.extend(cd.members[c])
    return subgroup_from_elements(G.degree, elems)


def normal_subgroups(G: PermGroup) -> list[PermGroup]:
    """All normal subgroups of G (exhaustive; see normal_subgroup_class_sets)."""
    return [subgroup_from_class_set(G, s) for s in normal_subgroup_class_sets(G)]


# -- quotients -------------------------------------------------------------


@dataclass
class Quotient:
    """G/N realized as a permutation group on the cosets of N, with the
    projection map recorded."""

    parent: PermGroup
    kernel: PermGroup
    group: PermGroup
    coset_index: dict = field(repr=False)
    coset_reps: tuple = field(repr=False)

    def project(self, g: Permutation) -> Permutation:
        images = tuple(self.coset_index[rep * g] for rep in self.coset_reps)
        return Permutation._unsafe(images)


class _IdentityQuotient(Quotient):
    def project(self, g: Permutation) -> Permutation:
        return g


def quotient_group(G: PermGroup, N: PermGroup) -> Quotient:
    """Quotient by a normal subgroup, acting faithfully on the N-cosets.

    The quotient by the trivial subgroup is G itself with the identity
    projection (so cached class/table data is shared)."""
    if not N.is_subgroup_of(G):
        raise PreconditionError("N is not a subgroup of G")
    if N.order == 1:
        return _IdentityQuotient(parent=G, kernel=N, group=G, coset_index={}, coset_reps=())
    for g in G.generators:
        ginv = g.inverse()
        for n in N.generators:
            if (ginv * n * g) not in N:
                raise PreconditionError("N is not normal in G")
    n_elems = N.elements()
    coset_index: dict[Permutation, int] = {}
    coset_reps: list[Permutation] = []

    def new_coset(rep: Permutation) -> int:
        idx = len(coset_reps)
        coset_reps.append(rep)
        for n in n_elems:
            coset_index[n * rep] = idx
        return idx

    new_coset(Permutation.identity(G.degree))
    queue = [0]
    while queue:
        i = queue.pop(0)
        rep = coset_reps[i]
        for g in G.generators:
            t = rep * g
            if t not in coset_index:
                queue.append(new_coset(t))
    m = len(coset_reps)
    if m * N.order != G.order:
        raise PreconditionError("coset enumeration mismatch; N not a subgroup?")
    quo = Quotient(parent=G, kernel=N, group=trivial_group(m), coset_index=coset_index, coset_reps=tuple(coset_reps))
    quo.group = PermGroup(m, [quo.project(g) for g in G.generators])
    if quo.group.order != G.order // N.order:  # pragma: no cover
        raise InternalInvariantError("quotient order mismatch")
    return quo
