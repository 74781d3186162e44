"""Exact arithmetic in the cyclotomic integer rings Z[zeta_n].

Values are coefficient vectors of length n over the power basis
1, zeta, ..., zeta^(n-1); the canonical form is the remainder modulo the
n-th cyclotomic polynomial, so equal values always have identical
coefficient vectors and the nonzero support sits below phi(n).  Mixed
moduli are handled by lifting both operands into the lcm modulus, which
never requires descending to a smaller ring.

Also here: Galois elements zeta -> zeta^m (including the automorphism that
fixes p'-roots of unity and raises p-power roots to their (1+p)-th power),
and the reduction of Z[zeta_n] modulo a fixed maximal ideal over p into an
explicit finite field, which is what decides p-block membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import InputError, InternalInvariantError

__all__ = [
    "Cyclotomic",
    "GaloisElement",
    "ResidueField",
    "make_sigma",
    "p_power_tau_elements",
    "apply_galois",
    "make_residue_field",
    "reduce_mod_p",
    "integer",
    "zeta",
]


@lru_cache(maxsize=None)
def _euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree."""
    if n == 1:
        return (-1, 1)
    # (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact polynomial division
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for e in range(len(num) - 1, dd - 1, -1):
        c = num[e]
        if c == 0:
            continue
        assert den[dd] == 1 or c % den[dd] == 0
        q = c // den[dd]
        out[e - dd] = q
        for k, a in enumerate(den):
            num[e - dd + k] -= q * a
    assert all(c == 0 for c in num), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def _reduction_data(n: int):
    phi = _euler_phi(n)
    poly = cyclotomic_polynomial(n)
    return phi, poly


def _canonical(n: int, coeffs: list[int]) -> tuple[int, ...]:
    """Reduce a length-n power-basis vector modulo Phi_n."""
    phi, poly = _reduction_data(n)
    if phi == n:  # never (phi(n) < n for n > 1; n == 1 handled below)
        return tuple(coeffs)
    if n == 1:
        return tuple(coeffs)
    c = list(coeffs)
    for e in range(n - 1, phi - 1, -1):
        q = c[e]
        if q == 0:
            continue
        base = e - phi
        for k, a in enumerate(poly):
            c[base + k] -= q * a
    return tuple(c)


class Cyclotomic:
    """An element of Z[zeta_n], stored canonically.

    Instances are immutable; arithmetic between different moduli lifts both
    sides into the lcm modulus.  Mathematical equality is decidable through
    that common lift, but hashing is deliberately disabled: index values by
    ``coeff_key(m)`` at an explicitly chosen common modulus instead.
    """

    __slots__ = ("n", "coeffs")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, n: int, coeffs):
        if n < 1:
            raise InputError("modulus must be positive")
        c = list(coeffs)
        if len(c) > n:
            folded = [0] * n
            for e, v in enumerate(c):
                folded[e % n] += v
            c = folded
        else:
            c = c + [0] * (n - len(c))
        self.n = n
        self.coeffs = _canonical(n, c)

    @classmethod
    def _raw(cls, n: int, canonical: tuple[int, ...]) -> "Cyclotomic":
        x = object.__new__(cls)
        x.n = n
        x.coeffs = canonical
        return x

    # -- constructors --

    @classmethod
    def from_int(cls, k: int, n: int = 1) -> "Cyclotomic":
        coeffs = [0] * n
        coeffs[0] = k
        return cls(n, coeffs)

    @classmethod
    def root(cls, n: int, e: int = 1) -> "Cyclotomic":
        coeffs = [0] * n
        coeffs[e % n] += 1
        return cls(n, coeffs)

    # -- structure --

    def support(self) -> list[int]:
        return [e for e, c in enumerate(self.coeffs) if c]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_integer(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_integer():
            raise InputError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def lift(self, m: int) -> "Cyclotomic":
        """The same value in Z[zeta_m] for any multiple m of the modulus."""
        if m == self.n:
            return self
        if m % self.n != 0:
            raise InputError(f"cannot lift modulus {self.n} into {m}")
        d = m // self.n
        coeffs = [0] * m
        for e, c in enumerate(self.coeffs):
            coeffs[e * d] = c
        return Cyclotomic(m, coeffs)

    def coeff_key(self, m: int | None = None) -> tuple[int, ...]:
        """Canonical coefficient tuple at modulus m (default: own modulus)."""
        if m is None or m == self.n:
            return self.coeffs
        return self.lift(m).coeffs

    # -- arithmetic --

    def _pair(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self.n == other.n:
            return self, other
        m = self.n // gcd(self.n, other.n) * other.n
        return self.lift(m), other.lift(m)

    def __add__(self, other) -> "Cyclotomic":
        other = _coerce(other, self.n)
        a, b = self._pair(other)
        return Cyclotomic._raw(a.n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __sub__(self, other) -> "Cyclotomic":
        other = _coerce(other, self.n)
        a, b = self._pair(other)
        return Cyclotomic._raw(a.n, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic._raw(self.n, tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "Cyclotomic":
        if isinstance(other, int):
            return Cyclotomic._raw(self.n, tuple(c * other for c in self.coeffs))
        a, b = self._pair(other)
        n = a.n
        sa, sb = a.support(), b.support()
        if not sa or not sb:
            return Cyclotomic._raw(n, (0,) * n)
        if len(sb) < len(sa):
            a, b, sa, sb = b, a, sb, sa
        out = [0] * n
        ac, bc = a.coeffs, b.coeffs
        for e1 in sa:
            v1 = ac[e1]
            for e2 in sb:
                out[(e1 + e2) % n] += v1 * bc[e2]
        return Cyclotomic(n, out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            raise InputError("negative powers are not defined in Z[zeta]")
        result = Cyclotomic.from_int(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation (the Galois element zeta -> zeta^-1)."""
        return apply_galois(self, GaloisElement(self.n, self.n - 1 if self.n > 1 else 0))

    def exact_div(self, k: int) -> "Cyclotomic":
        """Divide by a rational integer; raises unless exact."""
        if k == 0:
            raise InputError("division by zero")
        if any(c % k for c in self.coeffs):
            raise InternalInvariantError(f"inexact division of {self} by {k}")
        return Cyclotomic._raw(self.n, tuple(c // k for c in self.coeffs))

    # -- comparisons --

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_integer() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"

    def __str__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(f"{c}")
            else:
                z = f"z{self.n}" if e == 1 else f"z{self.n}^{e}"
                if c == 1:
                    terms.append(z)
                elif c == -1:
                    terms.append(f"-{z}")
                else:
                    terms.append(f"{c}*{z}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out


def _coerce(value, n: int) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, int):
        return Cyclotomic.from_int(value, n)
    raise InputError(f"cannot use {value!r} as a cyclotomic value")


def integer(k: int, n: int = 1) -> Cyclotomic:
    return Cyclotomic.from_int(k, n)


def zeta(n: int, e: int = 1) -> Cyclotomic:
    return Cyclotomic.root(n, e)


# -- Galois elements --------------------------------------------------------


@dataclass(frozen=True)
class GaloisElement:
    """The automorphism of Q(zeta_n) sending zeta_n to zeta_n^m."""

    n: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "m", self.m % self.n if self.n > 1 else 0)
        if gcd(self.m, self.n) != 1:
            raise InputError(f"{self.m} is not invertible modulo {self.n}")

    def compose(self, other: "GaloisElement") -> "GaloisElement":
        if self.n != other.n:
            raise InputError("modulus mismatch")
        return GaloisElement(self.n, self.m * other.m % self.n)

    def inverse(self) -> "GaloisElement":
        if self.n == 1:
            return self
        return GaloisElement(self.n, pow(self.m, -1, self.n))

    def order(self) -> int:
        if self.n == 1:
            return 1
        k, x = 1, self.m % self.n
        while x != 1 % self.n:
            x = x * self.m % self.n
            k += 1
        return k

    def is_identity(self) -> bool:
        return self.m % self.n == 1 % self.n


def apply_galois(x: Cyclotomic, g: GaloisElement) -> Cyclotomic:
    """Apply zeta -> zeta^m coefficient-wise; a ring automorphism."""
    if x.n != g.n:
        raise InputError(f"modulus mismatch: value in Z[zeta_{x.n}], element on Q(zeta_{g.n})")
    out = [0] * x.n
    for e, c in enumerate(x.coeffs):
        if c:
            out[(e * g.m) % x.n] += c
    return Cyclotomic(x.n, out)


def _split_p_part(n: int, p: int) -> tuple[int, int]:
    np_ = 1
    rest = n
    while rest % p == 0:
        rest //= p
        np_ *= p
    return np_, rest


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    # m1, m2 coprime
    if m1 == 1:
        return r2 % m2 if m2 > 1 else 0
    if m2 == 1:
        return r1 % m1
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return (r1 + m1 * t) % (m1 * m2)


def make_sigma(n: int, p: int) -> GaloisElement:
    """The automorphism fixing p'-roots of unity and sending p-power roots
    of unity to their (1+p)-th power, restricted to Q(zeta_n)."""
    n_p, n_pp = _split_p_part(n, p)
    m = _crt((1 + p) % n_p if n_p > 1 else 0, n_p, 1 % n_pp if n_pp > 1 else 0, n_pp)
    if n == 1:
        return GaloisElement(1, 0)
    return GaloisElement(n, m % n)


def p_power_tau_elements(n: int, p: int) -> list[GaloisElement]:
    """All automorphisms of Q(zeta_n) that fix every p'-root of unity and
    have p-power multiplicative order (the p-power-order part of the Galois
    subgroup acting trivially on p'-roots)."""
    if n == 1:
        return [GaloisElement(1, 0)]
    _, n_pp = _split_p_part(n, p)
    out = []
    for m in range(1, n + 1):
        if gcd(m, n) != 1:
            continue
        if m % n_pp != 1 % n_pp:
            continue
        g = GaloisElement(n, m)
        o = g.order()
        while o % p == 0:
            o //= p
        if o == 1:
            out.append(g)
    return sorted(out, key=lambda g: g.m)


# -- reduction modulo a maximal ideal over p --------------------------------


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class _Fq:
    """Arithmetic in F_{p^f} = F_p[x]/(h), elements as coefficient tuples.

    Large degrees switch to numpy convolution with a precomputed reduction
    matrix (rows: x^(f+j) mod h); coefficients stay far below the int64
    range since they are reduced mod p at every step.
    """

    def __init__(self, p: int, modulus: tuple[int, ...]):
        self.p = p
        self.f = len(modulus) - 1
        self.modulus = modulus  # monic, ascending degree
        self.zero = (0,) * self.f
        self.one = (1,) + (0,) * (self.f - 1)
        self._red = None
        if self.f >= 8:
            import numpy as np

            f = self.f
            rows = np.zeros((f - 1, f), dtype=np.int64)
            row = np.array([(-c) % p for c in modulus[:f]], dtype=np.int64)  # x^f mod h
            rows[0] = row
            for j in range(1, f - 1):
                lead = int(row[f - 1])
                row = np.roll(row, 1)
                row[0] = 0
                row = (row + lead * rows[0]) % p
                rows[j] = row
            self._red = rows
            self._np = np

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul(self, a, b):
        p, f, h = self.p, self.f, self.modulus
        if self._red is not None:
            np = self._np
            c = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
            low = c[:f].copy()
            if c.shape[0] > f:
                low = (low + c[f:] @ self._red) % p
            else:
                low %= p
            return tuple(int(v) for v in low)
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        for e in range(2 * f - 2, f - 1, -1):
            q = prod[e]
            if q:
                prod[e] = 0
                for k in range(f):
                    prod[e - f + k] = (prod[e - f + k] - q * h[k]) % p
        return tuple(prod[:f])

    def pow(self, a, k: int):
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def from_int(self, k: int):
        return (k % self.p,) + (0,) * (self.f - 1)

    def element_order(self, a, q_minus_1_factors: dict[int, int]) -> int:
        if a == self.zero:
            raise InputError("zero has no multiplicative order")
        order = 1
        for r, e in q_minus_1_factors.items():
            order *= r ** e
        for r in q_minus_1_factors:
            while order % r == 0 and self.pow(a, order // r) == self.one:
                order //= r
        return order


def _poly_powmod_x(p: int, exp: int, h: tuple[int, ...]) -> tuple[int, ...]:
    """x^exp modulo (h, p); h has degree >= 2, coefficients ascending."""
    f = len(h) - 1
    fq = _Fq(p, h)
    base = tuple(1 if i == 1 else 0 for i in range(f))
    return fq.pow(base, exp)


def _poly_gcd_is_one(p: int, a: list[int], b: list[int]) -> bool:
    def deg(u):
        d = len(u) - 1
        while d >= 0 and u[d] % p == 0:
            d -= 1
        return d

    a, b = list(a), list(b)
    while True:
        da, db = deg(a), deg(b)
        if db < 0:
            return da == 0
        if da < 0:
            return db == 0
        if da < db:
            a, b = b, a
            da, db = db, da
        inv = pow(b[db] % p, -1, p)
        shift = da - db
        factor = a[da] * inv % p
        for k in range(db + 1):
            a[k + shift] = (a[k + shift] - factor * b[k]) % p
        # loop continues with reduced a


def _is_irreducible(p: int, h: tuple[int, ...]) -> bool:
    f = len(h) - 1
    if f == 1:
        return True
    # Rabin: x^(p^f) == x mod h, and gcd(h, x^(p^(f/q)) - x) == 1 for primes q | f
    xq = _poly_powmod_x(p, p ** f, h)
    x_itself = tuple(1 if i == 1 else 0 for i in range(f))
    if xq != x_itself:
        return False
    for q in _factorize(f):
        t = list(_poly_powmod_x(p, p ** (f // q), h))
        t[1] = (t[1] - 1) % p
        if not _poly_gcd_is_one(p, list(h), t):
            return False
    return True


@lru_cache(maxsize=None)
def _field_modulus(p: int, f: int) -> tuple[int, ...]:
    """Deterministic monic irreducible of degree f over F_p: the one whose
    coefficient vector encodes the smallest integer in base p."""
    if f == 1:
        return (0, 1)
    count = p ** f
    for code in range(count):
        coeffs = []
        c = code
        for _ in range(f):
            coeffs.append(c % p)
            c //= p
        h = tuple(coeffs) + (1,)
        if _is_irreducible(p, h):
            return h
    raise InternalInvariantError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class ResidueField:
    """F_{p^f} together with a designated root of unity z of order n_{p'};
    the ring map zeta_n -> z^u (u = inverse of n_p mod n_{p'}) kills the
    p-power roots and realizes reduction modulo a maximal ideal over p."""

    n: int
    p: int
    f: int
    n_p: int
    n_pprime: int
    field: _Fq
    z: tuple
    variant: int


_ROOT_TABLES: dict = {}
_ROOT_MATRICES: dict = {}


def _root_power_table(rf: ResidueField):
    key = (rf.n, rf.p, rf.variant)
    tab = _ROOT_TABLES.get(key)
    if tab is None:
        u = pow(rf.n_p % rf.n_pprime, -1, rf.n_pprime) if rf.n_pprime > 1 else 0
        tab = tuple(
            rf.field.pow(rf.z, (u * e) % rf.n_pprime) if rf.n_pprime > 1 else rf.field.one
            for e in range(rf.n)
        )
        _ROOT_TABLES[key] = tab
    return tab


_RESIDUE_FIELDS: dict = {}


def make_residue_field(n: int, p: int, variant: int = 0) -> ResidueField:
    """Residue field of Z[zeta_n] at a maximal ideal over p.

    f is the order of p modulo the p'-part of n; z = h^((p^f-1)/n_{p'}) for
    the (variant+1)-th field element h (in the fixed base-p element order)
    whose image has exact order n_{p'}.  The exact-order test only needs
    the factorization of n_{p'}, so arbitrarily large fields stay cheap.
    Different variants select different (Galois-conjugate) ideals; block
    partitions must not depend on the choice.  Cached by (n, p, variant).
    """
    cached = _RESIDUE_FIELDS.get((n, p, variant))
    if cached is not None:
        return cached
    if p < 2 or any(p % q == 0 for q in range(2, p)):
        raise InputError(f"{p} is not prime")
    n_p, n_pp = _split_p_part(n, p)
    if n_pp == 1:
        f = 1
    else:
        f, x = 1, p % n_pp
        while x != 1:
            x = x * p % n_pp
            f += 1
    fq = _Fq(p, _field_modulus(p, f))
    if n_pp == 1:
        z = fq.one
    else:
        q1 = p ** f - 1
        cofactor = q1 // n_pp
        npp_primes = list(_factorize(n_pp))
        # z = h^cofactor has exact order n_pp for a phi(n_pp)/n_pp fraction
        # of nonzero h; wrap the variant around that exact count
        admissible = q1
        for r in npp_primes:
            admissible = admissible // r * (r - 1)
        admissible //= cofactor
        want = variant % admissible
        found = 0
        z = None
        for code in range(1, p ** f):
            coeffs = []
            c = code
            for _ in range(f):
                coeffs.append(c % p)
                c //= p
            cand = fq.pow(tuple(coeffs), cofactor)
            if any(fq.pow(cand, n_pp // r) == fq.one for r in npp_primes):
                continue
            if found == want:
                z = cand
                break
            found += 1
        if z is None:  # pragma: no cover
            raise InternalInvariantError("no element of exact order n_p' found")
    rf = ResidueField(n=n, p=p, f=f, n_p=n_p, n_pprime=n_pp, field=fq, z=z, variant=variant)
    _RESIDUE_FIELDS[(n, p, variant)] = rf
    return rf


def reduce_mod_p(x: Cyclotomic, rf: ResidueField):
    """Image of x in the residue field (zeta_n -> z^u as documented)."""
    if rf.n % x.n != 0:
        raise InputError(f"value modulus {x.n} does not divide field modulus {rf.n}")
    if x.n != rf.n:
        x = x.lift(rf.n)
    fq = rf.field
    if fq._red is not None:
        np = fq._np
        mat = _ROOT_MATRICES.get((rf.n, rf.p, rf.variant))
        if mat is None:
            mat = np.array(_root_power_table(rf), dtype=np.int64)
            _ROOT_MATRICES[(rf.n, rf.p, rf.variant)] = mat
        vec = np.array([c % rf.p for c in x.coeffs], dtype=np.int64)
        return tuple(int(v) for v in (vec @ mat) % rf.p)
    table = _root_power_table(rf)
    acc = fq.zero
    for e, c in enumerate(x.coeffs):
        if c % rf.p:
            term = tuple((c * t) % rf.p for t in table[e])
            acc = fq.add(acc, term)
    return acc
