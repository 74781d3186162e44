"""Constructors for the named groups of the built-in corpus.

Every entry records its theoretical order, which doubles as an oracle: the
corpus writer refuses to emit a record whose stabilizer-chain order
disagrees with the intended group.  Groups are realized on small point
sets (cyclic groups as one cycle, affine groups on vectors, a few
regular representations built from explicit multiplication laws).
"""

from __future__ import annotations

import itertools
import json

from .errors import InputError
from .permgrp import PermGroup, Permutation, build_group, direct_product

__all__ = ["CATALOG", "group", "fallback_records", "write_corpus"]


def _cyclic(n: int) -> PermGroup:
    return build_group(n, [Permutation.from_cycles(n, [list(range(n))])])


def _abelian(*orders: int) -> PermGroup:
    return direct_product([_cyclic(n) for n in orders])


def _symmetric(n: int) -> PermGroup:
    return build_group(n, [Permutation.from_cycles(n, [[0, 1]]), Permutation.from_cycles(n, [list(range(n))])])


def _alternating(n: int) -> PermGroup:
    return build_group(n, [Permutation.from_cycles(n, [[0, 1, 2]]), Permutation.from_cycles(n, [list(range(n)) if n % 2 else list(range(1, n))])])


def _dihedral(n: int) -> PermGroup:
    rot = Permutation.from_cycles(n, [list(range(n))])
    refl = Permutation([(-i) % n for i in range(n)])
    return build_group(n, [rot, refl])


def _affine_cyclic(n: int, mult: int) -> PermGroup:
    """C_n : <x -> mult*x> on Z/n."""
    add = Permutation([(i + 1) % n for i in range(n)])
    mul = Permutation([(mult * i) % n for i in range(n)])
    return build_group(n, [add, mul])


def _vector_points(p: int, dim: int):
    pts = list(itertools.product(range(p), repeat=dim))
    return pts, {v: i for i, v in enumerate(pts)}


def _translations(p: int, dim: int) -> list[Permutation]:
    pts, idx = _vector_points(p, dim)
    out = []
    for d in range(dim):
        shift = tuple(1 if k == d else 0 for k in range(dim))
        out.append(Permutation([idx[tuple((v[k] + shift[k]) % p for k in range(dim))] for v in pts]))
    return out


def _matrix_perm(p: int, mat) -> Permutation:
    dim = len(mat)
    pts, idx = _vector_points(p, dim)
    images = []
    for v in pts:
        w = tuple(sum(mat[r][c] * v[c] for c in range(dim)) % p for r in range(dim))
        images.append(idx[w])
    return Permutation(images)


def _affine_matrix_group(p: int, dim: int, mats) -> PermGroup:
    gens = _translations(p, dim) + [_matrix_perm(p, m) for m in mats]
    return build_group(p ** dim, gens)


def _linear_on_nonzero(p: int, mats) -> PermGroup:
    pts = [v for v in itertools.product(range(p), repeat=2) if v != (0, 0)]
    idx = {v: i for i, v in enumerate(pts)}
    gens = []
    for m in mats:
        images = []
        for v in pts:
            w = ((m[0][0] * v[0] + m[0][1] * v[1]) % p, (m[1][0] * v[0] + m[1][1] * v[1]) % p)
            images.append(idx[w])
        gens.append(Permutation(images))
    return build_group(len(pts), gens)


def _sl23() -> PermGroup:
    return _linear_on_nonzero(3, [[[1, 1], [0, 1]], [[0, -1], [1, 0]]])


def _gl23() -> PermGroup:
    return _linear_on_nonzero(3, [[[1, 1], [0, 1]], [[0, -1], [1, 0]], [[1, 0], [0, -1]]])


def _m9() -> PermGroup:
    # C3^2 : Q8, sharply 2-transitive on 9 points
    i = [[0, -1], [1, 0]]
    j = [[1, 1], [1, -1]]
    return _affine_matrix_group(3, 2, [i, j])


def _qd3() -> PermGroup:
    # C3^2 : SL(2,3) inside AGL(2,3)
    return _affine_matrix_group(3, 2, [[[1, 1], [0, 1]], [[0, -1], [1, 0]]])


def _f36() -> PermGroup:
    return _affine_matrix_group(3, 2, [[[0, -1], [1, 0]]])


def _f75() -> PermGroup:
    return _affine_matrix_group(5, 2, [[[0, -1], [1, -1]]])


def _gf_points(mod_poly: list[int], p: int, deg: int):
    """Field elements of GF(p^deg) as tuples, with add/mul tables."""
    elems = list(itertools.product(range(p), repeat=deg))
    idx = {e: i for i, e in enumerate(elems)}

    def add(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul(a, b):
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        for e in range(2 * deg - 2, deg - 1, -1):
            q = prod[e]
            if q:
                prod[e] = 0
                for k in range(deg):
                    prod[e - deg + k] = (prod[e - deg + k] - q * mod_poly[k]) % p
        return tuple(prod[:deg])

    return elems, idx, add, mul


def _agl19() -> PermGroup:
    # AGL(1,9) = C3^2 : C8 on the 9 field elements of GF(9) = F_3[x]/(x^2+1)
    elems, idx, add, mul = _gf_points([1, 0], 3, 2)
    one = (1, 0)
    add1 = Permutation([idx[add(e, one)] for e in elems])
    addx = Permutation([idx[add(e, (0, 1))] for e in elems])
    # x + 1 generates GF(9)^* (order 8)
    g = (1, 1)
    mulg = Permutation([idx[mul(e, g)] for e in elems])
    return build_group(9, [add1, addx, mulg])


def _psl2(q: int, field=None) -> PermGroup:
    """PSL(2,q) on the projective line (q+1 points) for prime q."""
    pts = list(range(q)) + ["inf"]
    idx = {v: i for i, v in enumerate(pts)}

    def perm(f):
        return Permutation([idx[f(v)] for v in pts])

    t = perm(lambda v: "inf" if v == "inf" else (v + 1) % q)
    # multiplication by a square generator
    g = _primitive_root(q)
    s = g * g % q
    m = perm(lambda v: "inf" if v == "inf" else v * s % q)
    i = perm(lambda v: 0 if v == "inf" else ("inf" if v == 0 else (-pow(v, -1, q)) % q))
    return build_group(q + 1, [t, m, i])


def _pgl2(q: int) -> PermGroup:
    pts = list(range(q)) + ["inf"]
    idx = {v: i for i, v in enumerate(pts)}

    def perm(f):
        return Permutation([idx[f(v)] for v in pts])

    t = perm(lambda v: "inf" if v == "inf" else (v + 1) % q)
    g = _primitive_root(q)
    m = perm(lambda v: "inf" if v == "inf" else v * g % q)
    i = perm(lambda v: 0 if v == "inf" else ("inf" if v == 0 else (-pow(v, -1, q)) % q))
    return build_group(q + 1, [t, m, i])


def _psl28() -> PermGroup:
    # PSL(2,8) = SL(2,8) on the 9 points of the projective line over GF(8)
    elems, idx, add, mul = _gf_points([1, 1, 0], 2, 3)  # x^3 + x + 1
    pts = elems + ["inf"]
    pidx = {v: i for i, v in enumerate(pts)}
    one = (1, 0, 0)

    def inv(a):
        # GF(8)^* has order 7
        b = a
        for _ in range(5):
            b = mul(b, a)
        return b

    def perm(f):
        return Permutation([pidx[f(v)] for v in pts])

    t = perm(lambda v: "inf" if v == "inf" else add(v, one))
    g = (0, 1, 0)
    m = perm(lambda v: "inf" if v == "inf" else mul(v, g))
    i = perm(lambda v: (0, 0, 0) if v == "inf" else ("inf" if v == (0, 0, 0) else inv(v)))
    return build_group(9, [t, m, i])


def _primitive_root(q: int) -> int:
    for g in range(2, q):
        k, x = 1, g
        while x != 1:
            x = x * g % q
            k += 1
        if k == q - 1:
            return g
    raise InputError(f"no primitive root mod {q}")


def _regular_from_mult(elements: list, mult) -> PermGroup:
    """Regular permutation representation from a multiplication law."""
    idx = {e: i for i, e in enumerate(elements)}
    gens = []
    # right multiplications by a small generating set: probe all elements,
    # keep the ones that enlarge the generated group
    from .permgrp import trivial_group

    grp = trivial_group(len(elements))
    for g in elements:
        perm = Permutation([idx[mult(e, g)] for e in elements])
        if perm not in grp:
            gens.append(perm)
            grp = build_group(len(elements), gens)
    return grp


def _heisenberg3() -> PermGroup:
    # extraspecial 3^(1+2) of exponent 3, as UT(3,3) acting on F_3^3
    e12 = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    e23 = [[1, 0, 0], [0, 1, 1], [0, 0, 1]]
    pts, idx = _vector_points(3, 3)
    gens = []
    for m in (e12, e23):
        images = []
        for v in pts:
            w = tuple(sum(m[r][c] * v[c] for c in range(3)) % 3 for r in range(3))
            images.append(idx[w])
        gens.append(Permutation(images))
    return build_group(27, gens)


def _extraspecial27_exp9() -> PermGroup:
    # C9 : C3 with the automorphism x -> x^4
    return _affine_cyclic(9, 4)


def _heisenberg3_c2() -> PermGroup:
    # He3 : C2 where the involution inverts both standard generators:
    # Heisenberg law (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2),
    # automorphism (x,y,z) -> (-x,-y,z); regular representation.
    he = [(x, y, z) for x in range(3) for y in range(3) for z in range(3)]

    def hmul(a, b):
        return ((a[0] + b[0]) % 3, (a[1] + b[1]) % 3, (a[2] + b[2] + a[0] * b[1]) % 3)

    def alpha(a):
        return ((-a[0]) % 3, (-a[1]) % 3, a[2])

    elements = [(h, e) for h in he for e in range(2)]

    def mult(a, b):
        h1, e1 = a
        h2, e2 = b
        return (hmul(h1, h2 if e1 == 0 else alpha(h2)), (e1 + e2) % 2)

    return _regular_from_mult(elements, mult)


def _dic3() -> PermGroup:
    # dicyclic group of order 12 (C3 : C4)
    a = Permutation.from_cycles(7, [[0, 1, 2]])
    b = Permutation.from_cycles(7, [[1, 2], [3, 4, 5, 6]])
    return build_group(7, [a, b])


def _c3_c8() -> PermGroup:
    # C3 : C8, the 8-cycle inverting the 3-cycle through its square
    a = Permutation.from_cycles(11, [[0, 1, 2]])
    b = Permutation.from_cycles(11, [[1, 2], [3, 4, 5, 6, 7, 8, 9, 10]])
    return build_group(11, [a, b])


def _gdih9() -> PermGroup:
    # generalized dihedral group of C3 x C3 (order 18)
    g1 = Permutation.from_cycles(6, [[0, 1, 2]])
    g2 = Permutation.from_cycles(6, [[3, 4, 5]])
    inv = Permutation.from_cycles(6, [[1, 2], [4, 5]])
    return build_group(6, [g1, g2, inv])


def _c3wrc2() -> PermGroup:
    g1 = Permutation.from_cycles(6, [[0, 1, 2]])
    swap = Permutation.from_cycles(6, [[0, 3], [1, 4], [2, 5]])
    return build_group(6, [g1, swap])


def _c3wrc3() -> PermGroup:
    # Sylow 3-subgroup of S9 (order 81)
    a = Permutation.from_cycles(9, [[0, 1, 2]])
    t = Permutation.from_cycles(9, [[0, 3, 6], [1, 4, 7], [2, 5, 8]])
    return build_group(9, [a, t])


def _q8() -> PermGroup:
    a = Permutation.from_cycles(8, [[0, 1, 2, 3], [4, 5, 6, 7]])
    b = Permutation.from_cycles(8, [[0, 4, 2, 6], [1, 7, 3, 5]])
    return build_group(8, [a, b])


# name -> (constructor, order, flags)
CATALOG: dict = {}


def _add(name: str, builder, order: int, flags=()):
    if name in CATALOG:
        raise InputError(f"duplicate catalog entry {name!r}")
    CATALOG[name] = (builder, order, tuple(flags))


for _n in (3, 6, 9, 12, 15, 18, 21, 27, 33, 36, 39, 45, 63, 81, 99):
    _add(f"C{_n}", (lambda n: (lambda: _cyclic(n)))(_n), _n)
for _n in (2, 4, 5, 7, 8):
    _add(f"C{_n}", (lambda n: (lambda: _cyclic(n)))(_n), _n)
_add("Q8", _q8, 8)
_add("C3xC3", lambda: _abelian(3, 3), 9)
_add("C3xC9", lambda: _abelian(3, 9), 27)
_add("C3xC3xC3", lambda: _abelian(3, 3, 3), 27)
_add("C9xC9", lambda: _abelian(9, 9), 81)
_add("C6xC6", lambda: _abelian(6, 6), 36)
_add("C3xC15", lambda: _abelian(3, 15), 45)
for _n in (6, 9, 12, 15, 18, 27):
    _add(f"D{_n}", (lambda n: (lambda: _dihedral(n)))(_n), 2 * _n)
_add("S3", lambda: _symmetric(3), 6)
_add("S4", lambda: _symmetric(4), 24)
_add("S5", lambda: _symmetric(5), 120, ["almost_simple"])
_add("S6", lambda: _symmetric(6), 720, ["almost_simple"])
_add("A4", lambda: _alternating(4), 12)
_add("A5", lambda: _alternating(5), 60, ["simple", "perfect", "almost_simple"])
_add("A6", lambda: _alternating(6), 360, ["simple", "perfect", "almost_simple"])
_add("SL(2,3)", _sl23, 24)
_add("GL(2,3)", _gl23, 48)
_add("PSL(2,7)", lambda: _psl2(7), 168, ["simple", "perfect", "almost_simple"])
_add("PGL(2,7)", lambda: _pgl2(7), 336, ["almost_simple"])
_add("PSL(2,8)", _psl28, 504, ["simple", "perfect", "almost_simple"])
_add("C7:C3", lambda: _affine_cyclic(7, 2), 21)
_add("C13:C3", lambda: _affine_cyclic(13, 3), 39)
_add("C7:C6", lambda: _affine_cyclic(7, 3), 42)
_add("C27:C3", lambda: _affine_cyclic(27, 10), 81)
_add("Dic3", _dic3, 12)
_add("C3:C8", _c3_c8, 24)
_add("GDih(C3xC3)", _gdih9, 18)
_add("C3wrC2", _c3wrc2, 18)
_add("C3wrC3", _c3wrc3, 81)
_add("He3", _heisenberg3, 27)
_add("He3:C2", _heisenberg3_c2, 54)
_add("3^(1+2):C9", _extraspecial27_exp9, 27)
_add("F36", _f36, 36)
_add("F75", _f75, 75)
_add("M9", _m9, 72)
_add("Qd(3)", _qd3, 216)
_add("AGL(1,9)", _agl19, 72)
_add("S3xS3", lambda: direct_product([_symmetric(3), _symmetric(3)]), 36)
_add("S3xC3", lambda: direct_product([_symmetric(3), _cyclic(3)]), 18)
_add("A4xC2", lambda: direct_product([_alternating(4), _cyclic(2)]), 24)
_add("A4xC3", lambda: direct_product([_alternating(4), _cyclic(3)]), 36)
_add("A4xS3", lambda: direct_product([_alternating(4), _symmetric(3)]), 72)
_add("A4xA4", lambda: direct_product([_alternating(4), _alternating(4)]), 144)
_add("S4xS3", lambda: direct_product([_symmetric(4), _symmetric(3)]), 144)
_add("A5xC3", lambda: direct_product([_alternating(5), _cyclic(3)]), 180)
_add("A5xS3", lambda: direct_product([_alternating(5), _symmetric(3)]), 360)

# -- broader systematic families, keeping orders at most 400 ----------------


def _pgl2_gf9() -> PermGroup:
    elems, idx, add, mul = _gf_points([1, 0], 3, 2)  # GF(9) = F_3[x]/(x^2+1)
    pts = elems + ["inf"]
    pidx = {v: i for i, v in enumerate(pts)}
    zero, one, g = (0, 0), (1, 0), (1, 1)  # x + 1 generates GF(9)^*

    def inv(a):
        b = a
        for _ in range(6):
            b = mul(b, a)
        return b

    def perm(f):
        return Permutation([pidx[f(v)] for v in pts])

    t = perm(lambda v: "inf" if v == "inf" else add(v, one))
    m = perm(lambda v: "inf" if v == "inf" else mul(v, g))
    i = perm(lambda v: zero if v == "inf" else ("inf" if v == zero else inv(v)))
    return build_group(10, [t, m, i])


_add("PGL(2,9)", _pgl2_gf9, 720, ["almost_simple"])

for _q, _mult, _ordmult in [(19, 7, 3), (31, 5, 3), (37, 10, 3), (43, 6, 3), (61, 13, 3), (67, 29, 3), (73, 8, 3), (79, 23, 3), (97, 35, 3), (103, 46, 3), (109, 45, 3), (127, 19, 3)]:
    _add(f"C{_q}:C3", (lambda q, m: (lambda: _affine_cyclic(q, m)))(_q, _mult), _q * _ordmult)
_add("C9:C6", lambda: _affine_cyclic(9, 2), 54)
_add("C27:C6", lambda: _affine_cyclic(27, 17), 162)
_add("C13:C4", lambda: _affine_cyclic(13, 5), 52)  # 3'-group, exercises skips
_add("C19:C9", lambda: _affine_cyclic(19, 4), 171)
_add("C37:C9", lambda: _affine_cyclic(37, 7), 333)
_add("D81", lambda: _dihedral(81), 162)
for _n in (21, 33, 39, 45):
    _add(f"D{_n}", (lambda n: (lambda: _dihedral(n)))(_n), 2 * _n)


def _c3wrc4() -> PermGroup:
    a = Permutation.from_cycles(12, [[0, 1, 2]])
    t = Permutation.from_cycles(12, [[0, 3, 6, 9], [1, 4, 7, 10], [2, 5, 8, 11]])
    return build_group(12, [a, t])


def _s3wrc2() -> PermGroup:
    a = Permutation.from_cycles(6, [[0, 1, 2]])
    b = Permutation.from_cycles(6, [[0, 1]])
    t = Permutation.from_cycles(6, [[0, 3], [1, 4], [2, 5]])
    return build_group(6, [a, b, t])


def _c9wrc2() -> PermGroup:
    a = Permutation.from_cycles(18, [list(range(9))])
    t = Permutation([(i + 9) % 18 for i in range(18)])
    return build_group(18, [a, t])


_add("C3wrC4", _c3wrc4, 324)
_add("S3wrC2", _s3wrc2, 72)
_add("C9wrC2", _c9wrc2, 162)

# curated direct products (cyclic x cyclic pairs are already present as
# single cyclic entries, so they are left out)
_PRODUCT_PAIRS = [
    ("S3", "C4"), ("S3", "C5"), ("S3", "C6"), ("S3", "C7"), ("S3", "C9"),
    ("S3", "C12"), ("S3", "C15"), ("S3", "C21"), ("S3", "C27"), ("S3", "Q8"),
    ("S3", "D6"), ("S3", "D9"), ("S3", "D12"), ("S3", "D15"), ("S3", "Dic3"),
    ("S3", "C3xC3"), ("S3", "C7:C3"), ("S3", "He3"), ("S3", "3^(1+2):C9"),
    ("S3", "GDih(C3xC3)"), ("S3", "C3wrC2"), ("S3", "SL(2,3)"), ("S3", "S4"),
    ("A4", "C4"), ("A4", "C5"), ("A4", "C6"), ("A4", "C7"), ("A4", "C9"),
    ("A4", "C12"), ("A4", "C15"), ("A4", "Q8"), ("A4", "D6"), ("A4", "D9"),
    ("A4", "Dic3"), ("A4", "C3xC3"), ("A4", "C7:C3"), ("A4", "S4"),
    ("A4", "SL(2,3)"), ("A4", "GDih(C3xC3)"),
    ("S4", "C2"), ("S4", "C3"), ("S4", "C4"), ("S4", "C6"), ("S4", "C9"),
    ("S4", "Q8"), ("S4", "D6"), ("S4", "C3xC3"),
    ("A5", "C2"), ("A5", "C4"), ("A5", "C5"), ("A5", "C6"),
    ("S5", "C2"), ("S5", "C3"),
    ("D9", "C2"), ("D9", "C3"), ("D9", "C4"), ("D9", "C6"), ("D9", "C9"),
    ("D9", "D6"), ("D9", "D9"), ("D9", "Dic3"),
    ("He3", "C2"), ("He3", "C3"), ("He3", "C4"), ("He3", "C6"), ("He3", "C9"),
    ("He3", "Q8"), ("He3", "D6"),
    ("3^(1+2):C9", "C2"), ("3^(1+2):C9", "C3"), ("3^(1+2):C9", "C4"),
    ("3^(1+2):C9", "C6"), ("3^(1+2):C9", "C9"), ("3^(1+2):C9", "Q8"),
    ("C3xC3", "C2"), ("C3xC3", "C4"), ("C3xC3", "Q8"), ("C3xC3", "D6"),
    ("C3xC3", "Dic3"), ("C3xC3", "GDih(C3xC3)"),
    ("C7:C3", "C2"), ("C7:C3", "C3"), ("C7:C3", "C4"), ("C7:C3", "C6"),
    ("C7:C3", "C7:C3"), ("C7:C3", "S3"), ("C7:C3", "A4"),
    ("C13:C3", "C2"), ("C13:C3", "C3"), ("C13:C3", "S3"),
    ("GDih(C3xC3)", "C2"), ("GDih(C3xC3)", "C3"), ("GDih(C3xC3)", "C4"),
    ("GDih(C3xC3)", "C9"), ("GDih(C3xC3)", "GDih(C3xC3)"),
    ("Dic3", "C3"), ("Dic3", "C5"), ("Dic3", "C6"), ("Dic3", "Dic3"),
    ("SL(2,3)", "C2"), ("SL(2,3)", "C3"), ("SL(2,3)", "C5"), ("SL(2,3)", "S3"),
    ("GL(2,3)", "C2"), ("GL(2,3)", "C3"), ("GL(2,3)", "C7"),
    ("F36", "C2"), ("F36", "C3"), ("F36", "C5"), ("F36", "S3"),
    ("M9", "C2"), ("M9", "C3"), ("M9", "C5"),
    ("C3wrC2", "C2"), ("C3wrC2", "C3"), ("C3wrC2", "C4"), ("C3wrC2", "C9"),
    ("C3wrC3", "C2"), ("C3wrC3", "C3"), ("C3wrC3", "C4"),
    ("AGL(1,9)", "C2"), ("AGL(1,9)", "C3"), ("AGL(1,9)", "C5"),
    ("C27:C3", "C2"), ("C27:C3", "C3"), ("C27:C3", "C4"),
    ("PSL(2,7)", "C2"), ("He3:C2", "C2"), ("He3:C2", "C3"),
    ("C9:C6", "C2"), ("C9:C6", "C3"), ("C9:C6", "C6"),
    ("Qd(3)", "C2"), ("C7:C6", "C3"), ("C7:C6", "S3"),
    ("D12", "C3"), ("D15", "C3"), ("D6", "D6"), ("D6", "C9"),
    ("C3:C8", "C3"), ("C3:C8", "C9"), ("C3:C8", "S3"),
    ("Q8", "C9"), ("Q8", "C21"), ("Q8", "C27"),
]


def _product_builder(a: str, b: str):
    def build() -> PermGroup:
        return direct_product([group(a), group(b)])

    return build


for _a, _b in _PRODUCT_PAIRS:
    _name = f"{_a}x{_b}"
    if _name in CATALOG:
        continue
    _order = CATALOG[_a][1] * CATALOG[_b][1]
    if _order > 400:
        continue
    _add(_name, _product_builder(_a, _b), _order)


def group(name: str) -> PermGroup:
    """Build a catalog group by name; the order is verified on the way out."""
    try:
        builder, order, _ = CATALOG[name]
    except KeyError:
        raise InputError(f"unknown catalog group {name!r}") from None
    g = builder()
    if g.order != order:
        raise InputError(f"catalog group {name}: built order {g.order}, expected {order}")
    return g


def fallback_records() -> list[dict]:
    """Corpus records for every catalog group, orders verified."""
    out = []
    for name in CATALOG:
        builder, order, flags = CATALOG[name]
        g = group(name)
        rec = {
            "id": name,
            "degree": g.degree,
            "generators": [list(p.images) for p in g.generators],
            "order": order,
        }
        if flags:
            rec["flags"] = sorted(flags)
        out.append(rec)
    return out


def write_corpus(path: str) -> int:
    """Write the fallback corpus as JSON lines; returns the record count."""
    records = fallback_records()
    with open(path, "w") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
    return len(records)


if __name__ == "__main__":
    import sys

    target = sys.argv[1] if len(sys.argv) > 1 else "/dev/stdout"
    n = write_corpus(target)
    print(f"wrote {n} records", file=sys.stderr)
