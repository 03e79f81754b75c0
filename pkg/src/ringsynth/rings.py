"""Exact arithmetic in Z[w] and D[w] = Z[1/sqrt2, i], w = exp(i pi/4).

Elements of Z[w] are stored as four integer coefficients (c0, c1, c2, c3)
with value c0 + c1 w + c2 w^2 + c3 w^3, using w^4 = -1.  Elements of D[w]
are stored as a Z[w] numerator over sqrt2^k, normalized so that either
k == 0 or the numerator is not divisible by sqrt2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class RingTag(str, Enum):
    Z = "Z"
    Zsqrt2 = "Zsqrt2"
    Zisqrt2 = "Zisqrt2"
    Zi = "Zi"
    Zomega = "Zomega"
    D = "D"
    Dsqrt2 = "Dsqrt2"
    Disqrt2 = "Disqrt2"
    Di = "Di"
    Domega = "Domega"
    Z_over_sqrt2 = "Z_over_sqrt2"
    Zi_over_sqrt2 = "Zi_over_sqrt2"

    def __str__(self):
        return self.value


# Direct inclusions A -> B meaning A is a subset of B.
_COVERS = {
    RingTag.Z: {RingTag.Zsqrt2, RingTag.Zisqrt2, RingTag.Zi, RingTag.D},
    RingTag.Zsqrt2: {RingTag.Zomega, RingTag.Dsqrt2},
    RingTag.Zisqrt2: {RingTag.Zomega, RingTag.Disqrt2},
    RingTag.Zi: {RingTag.Zomega, RingTag.Di},
    RingTag.Zomega: {RingTag.Domega},
    RingTag.D: {RingTag.Dsqrt2, RingTag.Disqrt2, RingTag.Di, RingTag.Z_over_sqrt2},
    RingTag.Z_over_sqrt2: {RingTag.Dsqrt2, RingTag.Zi_over_sqrt2},
    RingTag.Di: {RingTag.Zi_over_sqrt2},
    RingTag.Zi_over_sqrt2: {RingTag.Domega},
    RingTag.Dsqrt2: {RingTag.Domega},
    RingTag.Disqrt2: {RingTag.Domega},
    RingTag.Domega: set(),
}


def _upsets():
    up = {}

    def visit(t):
        if t in up:
            return up[t]
        s = {t}
        for u in _COVERS[t]:
            s |= visit(u)
        up[t] = frozenset(s)
        return up[t]

    for t in RingTag:
        visit(t)
    return up


_UP = _upsets()


def tag_leq(a: RingTag, b: RingTag) -> bool:
    """True when ring a is contained in ring b."""
    return b in _UP[RingTag(a)]


# ---------------------------------------------------------------------------
# Z[w]


class RingInt:
    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (int(c0), int(c1), int(c2), int(c3))

    @classmethod
    def _raw(cls, t):
        obj = object.__new__(cls)
        obj.c = t
        return obj

    @classmethod
    def from_int(cls, n: int) -> RingInt:
        return cls._raw((int(n), 0, 0, 0))

    def __repr__(self):
        return "RingInt%r" % (self.c,)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RingInt.from_int(other)
        if not isinstance(other, RingInt):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(("RingInt", self.c))

    def __bool__(self):
        return any(self.c)

    def is_zero(self):
        return not any(self.c)

    def __add__(self, other):
        if isinstance(other, int):
            other = RingInt.from_int(other)
        a, b = self.c, other.c
        return RingInt._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return RingInt._raw((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other):
        if isinstance(other, int):
            other = RingInt.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            a = self.c
            return RingInt._raw((a[0] * other, a[1] * other, a[2] * other, a[3] * other))
        if not isinstance(other, RingInt):
            return NotImplemented
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = other.c
        return RingInt._raw((
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
        ))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power in Z[w]")
        r = RingInt.from_int(1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def conj(self) -> RingInt:
        a0, a1, a2, a3 = self.c
        return RingInt._raw((a0, -a3, -a2, -a1))

    # Galois automorphisms w -> w^3 and w -> w^5 = -w
    def sigma3(self) -> RingInt:
        a0, a1, a2, a3 = self.c
        return RingInt._raw((a0, a3, -a2, a1))

    def sigma5(self) -> RingInt:
        a0, a1, a2, a3 = self.c
        return RingInt._raw((a0, -a1, a2, -a3))

    def mul_sqrt2(self) -> RingInt:
        a0, a1, a2, a3 = self.c
        return RingInt._raw((a1 - a3, a0 + a2, a1 + a3, a2 - a0))

    def divisible_by_sqrt2(self) -> bool:
        a0, a1, a2, a3 = self.c
        return (a0 - a2) % 2 == 0 and (a1 - a3) % 2 == 0

    def div_sqrt2(self) -> RingInt:
        a0, a1, a2, a3 = self.c
        if (a0 - a2) % 2 or (a1 - a3) % 2:
            raise ValueError("not divisible by sqrt2")
        return RingInt._raw(((a1 - a3) // 2, (a0 + a2) // 2, (a1 + a3) // 2, (a2 - a0) // 2))

    def norm(self) -> int:
        """Product of all four Galois conjugates, an ordinary integer."""
        x = self * self.conj()
        y = x * x.sigma5()
        return y.c[0]

    def exact_div(self, other: RingInt) -> RingInt:
        """self / other, assuming the quotient lies in Z[w]."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Z[w]")
        co = other.conj()
        partial = other * co
        rest = co * partial.sigma5()
        nrm = (partial * partial.sigma5()).c[0]
        t = self * rest
        if any(x % nrm for x in t.c):
            raise ValueError("quotient not in Z[w]")
        return RingInt._raw(tuple(x // nrm for x in t.c))

    def real_coords(self):
        """(alpha, beta, gamma, delta) with value alpha + beta sqrt2 + i gamma + i delta sqrt2.

        beta and delta may be half integers; they are returned as numerators over 2.
        """
        a0, a1, a2, a3 = self.c
        return (2 * a0, a1 - a3, 2 * a2, a1 + a3)


def ringint_arith(a: RingInt, b: RingInt | None, op: str) -> RingInt:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError("unknown op %r" % op)


def conjugate(a):
    return a.conj()


def divide_by_root2(a: RingInt) -> RingInt | None:
    """a / sqrt2, or None when a is not divisible."""
    if not a.divisible_by_sqrt2():
        return None
    return a.div_sqrt2()


ZERO_INT = RingInt(0, 0, 0, 0)
ONE_INT = RingInt(1, 0, 0, 0)
SQRT2_INT = RingInt(0, 1, 0, -1)
I_INT = RingInt(0, 0, 1, 0)
ISQRT2_INT = RingInt(0, 1, 0, 1)
OMEGA_INT = RingInt(0, 1, 0, 0)
ONE_PLUS_I_INT = RingInt(1, 0, 1, 0)


# ---------------------------------------------------------------------------
# D[w]


def _normalize(a0, a1, a2, a3, k):
    if not (a0 or a1 or a2 or a3):
        return 0, 0, 0, 0, 0
    while k > 0 and not ((a0 - a2) & 1) and not ((a1 - a3) & 1):
        a0, a1, a2, a3 = (a1 - a3) >> 1, (a0 + a2) >> 1, (a1 + a3) >> 1, (a2 - a0) >> 1
        k -= 1
    return a0, a1, a2, a3, k


def _lift(a0, a1, a2, a3, d):
    """Multiply by sqrt2^d, d >= 0."""
    if d >= 2:
        m = 1 << (d >> 1)
        a0, a1, a2, a3 = a0 * m, a1 * m, a2 * m, a3 * m
    if d & 1:
        a0, a1, a2, a3 = a1 - a3, a0 + a2, a1 + a3, a2 - a0
    return a0, a1, a2, a3


def _rawmul(a0, a1, a2, a3, b0, b1, b2, b3):
    return (a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0)


def lincomb2(p, x, q, y):
    """p*x + q*y for RingScalars with a single normalization (hot path of circuit evaluation)."""
    if not (x.a or x.b or x.c or x.d):
        return q * y
    if not (y.a or y.b or y.c or y.d):
        return p * x
    u = _rawmul(p.a, p.b, p.c, p.d, x.a, x.b, x.c, x.d)
    v = _rawmul(q.a, q.b, q.c, q.d, y.a, y.b, y.c, y.d)
    ku, kv = p.k + x.k, q.k + y.k
    if ku < kv:
        u = _lift(*u, kv - ku)
        ku = kv
    elif kv < ku:
        v = _lift(*v, ku - kv)
    return RingScalar._make(u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3], ku)


class RingScalar:
    """num / sqrt2^k with num in Z[w]."""

    __slots__ = ("a", "b", "c", "d", "k")

    def __init__(self, num=0, k: int = 0):
        if isinstance(num, RingScalar):
            self.a, self.b, self.c, self.d, self.k = num.a, num.b, num.c, num.d, num.k
            return
        if isinstance(num, int):
            num = RingInt.from_int(num)
        if isinstance(num, tuple):
            num = RingInt(*num)
        if k < 0:
            num = num * (1 << ((-k) // 2))
            if (-k) % 2:
                num = num.mul_sqrt2()
            k = 0
        self.a, self.b, self.c, self.d, self.k = _normalize(*num.c, k)

    @classmethod
    def _make(cls, a0, a1, a2, a3, k):
        obj = object.__new__(cls)
        obj.a, obj.b, obj.c, obj.d, obj.k = _normalize(a0, a1, a2, a3, k)
        return obj

    @classmethod
    def _raw(cls, a0, a1, a2, a3, k):
        obj = object.__new__(cls)
        obj.a, obj.b, obj.c, obj.d, obj.k = a0, a1, a2, a3, k
        return obj

    @property
    def num(self) -> RingInt:
        return RingInt._raw((self.a, self.b, self.c, self.d))

    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return "RingScalar(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.k == 0 and self.b == 0 and self.c == 0 and self.d == 0 and self.a == other
        if isinstance(other, RingInt):
            other = RingScalar(other)
        if not isinstance(other, RingScalar):
            return NotImplemented
        return (self.k == other.k and self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d, self.k))

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def is_zero(self):
        return not (self.a or self.b or self.c or self.d)

    def __neg__(self):
        return RingScalar._raw(-self.a, -self.b, -self.c, -self.d, self.k)

    def __add__(self, other):
        if not isinstance(other, RingScalar):
            if isinstance(other, (int, RingInt)):
                other = RingScalar(other)
            else:
                return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        k1, k2 = self.k, other.k
        if k1 == k2:
            return RingScalar._make(self.a + other.a, self.b + other.b,
                                    self.c + other.c, self.d + other.d, k1)
        if k1 < k2:
            x = _lift(self.a, self.b, self.c, self.d, k2 - k1)
            return RingScalar._make(x[0] + other.a, x[1] + other.b,
                                    x[2] + other.c, x[3] + other.d, k2)
        y = _lift(other.a, other.b, other.c, other.d, k1 - k2)
        return RingScalar._make(self.a + y[0], self.b + y[1],
                                self.c + y[2], self.d + y[3], k1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RingScalar):
            if isinstance(other, (int, RingInt)):
                other = RingScalar(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RingScalar._make(self.a * other, self.b * other,
                                    self.c * other, self.d * other, self.k)
        if isinstance(other, RingInt):
            other = RingScalar(other)
        if not isinstance(other, RingScalar):
            return NotImplemented
        a0, a1, a2, a3 = self.a, self.b, self.c, self.d
        b0, b1, b2, b3 = other.a, other.b, other.c, other.d
        return RingScalar._make(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            self.k + other.k,
        )

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power; use inverse of a unit explicitly")
        r = ONE
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def conj(self) -> RingScalar:
        return RingScalar._raw(self.a, -self.d, -self.c, -self.b, self.k)

    def mul_sqrt2_pow(self, e: int) -> RingScalar:
        """Multiply by sqrt2^e for any integer e."""
        if e <= 0 or self.k >= e:
            return RingScalar._make(self.a, self.b, self.c, self.d, self.k - e)
        return RingScalar._make(*_lift(self.a, self.b, self.c, self.d, e - self.k), 0)

    def div_sqrt2_pow(self, e: int) -> RingScalar:
        return self.mul_sqrt2_pow(-e)

    def in_zomega(self) -> bool:
        return self.k == 0

    def to_ringint(self) -> RingInt:
        if self.k != 0:
            raise ValueError("%s is not in Z[w]" % self)
        return self.num


ZERO = RingScalar(0)
ONE = RingScalar(1)
HALF = RingScalar(1, 2)
SQRT2 = RingScalar(SQRT2_INT)
INV_SQRT2 = RingScalar(1, 1)
I = RingScalar(I_INT)
ISQRT2 = RingScalar(ISQRT2_INT)
OMEGA = RingScalar(OMEGA_INT)
ONE_PLUS_I = RingScalar(ONE_PLUS_I_INT)


def as_scalar(x) -> RingScalar:
    if isinstance(x, RingScalar):
        return x
    if isinstance(x, (int, RingInt, tuple)):
        return RingScalar(x)
    raise TypeError("cannot convert %r to a ring scalar" % (x,))


def omega_pow(e: int) -> RingScalar:
    e %= 8
    c = [0, 0, 0, 0]
    c[e % 4] = 1 if e < 4 else -1
    return RingScalar(RingInt(*c))


def i_pow(e: int) -> RingScalar:
    return omega_pow(2 * e)


# ---------------------------------------------------------------------------
# ring membership


_DYADIC_TAGS = (RingTag.D, RingTag.Dsqrt2, RingTag.Disqrt2, RingTag.Di, RingTag.Domega)


def _dyadic_flags(x: RingScalar):
    """Membership in D[sqrt2], D[i sqrt2], D[i] via fixed points of automorphisms."""
    num = x.num
    sign = -1 if x.k & 1 else 1
    real = num.conj() == num                   # fixed by w -> w^7
    gauss = num.sigma5() * sign == num         # fixed by w -> -w
    imag = num.sigma3() * sign == num          # fixed by w -> w^3
    return real, imag, gauss


def _int_flags(n: RingInt):
    a0, a1, a2, a3 = n.c
    return (
        a1 == 0 and a2 == 0 and a3 == 0,        # Z
        a2 == 0 and a1 + a3 == 0,               # Z[sqrt2]
        a2 == 0 and a1 - a3 == 0,               # Z[i sqrt2]
        a1 == 0 and a3 == 0,                    # Z[i]
    )


def scalar_tags(x) -> frozenset:
    """All ring tags (plain and super forms) that contain x."""
    x = as_scalar(x)
    tags = {RingTag.Domega}
    real, imag, gauss = _dyadic_flags(x)
    if real:
        tags.add(RingTag.Dsqrt2)
    if imag:
        tags.add(RingTag.Disqrt2)
    if gauss:
        tags.add(RingTag.Di)
    if real and gauss:
        tags.add(RingTag.D)
    if x.k == 0:
        tags.add(RingTag.Zomega)
        z, zr, zi2, zi = _int_flags(x.num)
        for flag, t in ((z, RingTag.Z), (zr, RingTag.Zsqrt2), (zi2, RingTag.Zisqrt2), (zi, RingTag.Zi)):
            if flag:
                tags.add(t)
    # x = u / sqrt2^q with u in Z (or Z[i]) for some q; only q = k, k + 1 can work
    for q in (x.k, x.k + 1):
        u = x.mul_sqrt2_pow(q)
        if u.k == 0:
            z, _, _, zi = _int_flags(u.num)
            if z:
                tags.add(RingTag.Z_over_sqrt2)
                tags.add(RingTag.Zi_over_sqrt2)
            if zi:
                tags.add(RingTag.Zi_over_sqrt2)
    return frozenset(tags)


_SCALAR_ORDER = (RingTag.Z, RingTag.Zsqrt2, RingTag.Zisqrt2, RingTag.Zi, RingTag.Zomega,
                 RingTag.D, RingTag.Dsqrt2, RingTag.Disqrt2, RingTag.Di, RingTag.Domega)


def membership(x) -> RingTag:
    """Smallest of the ten basic rings containing x."""
    tags = scalar_tags(x)
    best = None
    for t in _SCALAR_ORDER:
        if t in tags and (best is None or tag_leq(t, best)):
            best = t
    return best


def in_ring(x, tag) -> bool:
    return RingTag(tag) in scalar_tags(x)


# ---------------------------------------------------------------------------
# residues


@dataclass(frozen=True)
class Residue:
    modulus: str
    ring: RingTag
    rep: RingInt

    def __str__(self):
        return "%s mod %s in %s" % (format_int(self.rep), self.modulus, self.ring)


_MODULUS_ALIASES = {"2irt2": "2isqrt2", "2i√2": "2isqrt2", "2i*sqrt2": "2isqrt2", "1+w^2": "1+i"}

_MODULUS_RINGS = {
    "2": (RingTag.Zsqrt2, RingTag.Zisqrt2, RingTag.Zi),
    "4": (RingTag.Z,),
    "2isqrt2": (RingTag.Zisqrt2,),
    "1+i": (RingTag.Zi,),
}


def _coords_zsqrt2(n: RingInt):
    a0, a1, _, _ = n.c
    return a0, a1          # a0 + a1 sqrt2, since a3 = -a1


def _coords_zisqrt2(n: RingInt):
    a0, a1, _, _ = n.c
    return a0, a1          # a0 + a1 i sqrt2, since a3 = a1


def _coords_zi(n: RingInt):
    return n.c[0], n.c[2]


def residue(a, modulus: str, ring=None) -> Residue:
    """Canonical representative of a modulo one of 2, 4, 2 i sqrt2, 1+i.

    The ambient ring is inferred from a when not given; for a in Z every
    choice gives the same representative.
    """
    modulus = _MODULUS_ALIASES.get(str(modulus).replace(" ", ""), str(modulus).replace(" ", ""))
    if modulus not in _MODULUS_RINGS:
        raise ValueError("unsupported modulus %r" % modulus)
    x = as_scalar(a)
    if x.k != 0:
        raise ValueError("%s is not an algebraic integer" % x)
    tags = scalar_tags(x)
    if ring is None:
        for t in _MODULUS_RINGS[modulus]:
            if t in tags:
                ring = t
                break
        else:
            raise ValueError("%s does not lie in a ring with modulus %s" % (x, modulus))
    ring = RingTag(ring)
    if ring not in _MODULUS_RINGS[modulus] or ring not in tags:
        raise ValueError("%s is not in %s (modulus %s)" % (x, ring, modulus))
    n = x.num
    if modulus == "4":
        return Residue(modulus, ring, RingInt(n.c[0] % 4))
    if modulus == "1+i":
        u, v = _coords_zi(n)
        return Residue(modulus, ring, RingInt((u + v) % 2))
    if modulus == "2isqrt2":
        u, v = _coords_zisqrt2(n)
        return Residue(modulus, ring, RingInt(u % 4, v % 2, 0, v % 2))
    if ring == RingTag.Zsqrt2:
        u, v = _coords_zsqrt2(n)
        return Residue(modulus, ring, RingInt(u % 2, v % 2, 0, -(v % 2)))
    if ring == RingTag.Zisqrt2:
        u, v = _coords_zisqrt2(n)
        return Residue(modulus, ring, RingInt(u % 2, v % 2, 0, v % 2))
    u, v = _coords_zi(n)
    return Residue(modulus, ring, RingInt(u % 2, 0, v % 2, 0))


@dataclass(frozen=True)
class ResidueFacts:
    ring: RingTag
    norm_mod2: int
    mod_2isqrt2: RingInt | None
    gaussian_class: RingInt | None
    odd: bool


def residue_facts(u) -> ResidueFacts:
    """Facts used by the pairing lemmas.

    For u in Z[i sqrt2]: u^dag u mod 2 and the class of u mod 2 i sqrt2.
    For u in Z[i]: the class of u mod 2 (odd means 1 or i).
    """
    x = as_scalar(u)
    ring = membership(x)
    nrm = x * x.conj()
    norm_mod2 = nrm.a % 2 if nrm.k == 0 else None
    m2i = None
    gc = None
    if tag_leq(ring, RingTag.Zisqrt2):
        m2i = residue(x, "2isqrt2").rep
    if tag_leq(ring, RingTag.Zi):
        gc = residue(x, "2", RingTag.Zi).rep
    return ResidueFacts(ring, norm_mod2, m2i, gc, norm_mod2 == 1)


# ---------------------------------------------------------------------------
# text format


def format_int(n: RingInt) -> str:
    return "(%d,%d,%d,%d)" % n.c


def format_scalar(x) -> str:
    x = as_scalar(x)
    return "(%d,%d,%d,%d)/rt2^%d" % (x.a, x.b, x.c, x.d, x.k)


_SHORTHANDS = {
    "0": ZERO,
    "1": ONE,
    "1/2": HALF,
    "i": I,
    "w": OMEGA,
    "rt2": SQRT2,
    "1/rt2": INV_SQRT2,
    "irt2": ISQRT2,
}

_CANON = re.compile(
    r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)(?:\s*/\s*rt2\^(\d+))?$")


def parse_scalar(text: str) -> RingScalar:
    s = text.strip()
    m = _CANON.match(s)
    if m:
        c = [int(g) for g in m.groups()[:4]]
        k = int(m.group(5) or 0)
        return RingScalar(RingInt(*c), k)
    sign = 1
    if s.startswith("-"):
        sign, s = -1, s[1:].strip()
    if s in _SHORTHANDS:
        return _SHORTHANDS[s] * sign
    if re.fullmatch(r"\d+", s):
        return RingScalar(sign * int(s))
    raise ValueError("cannot parse scalar %r" % text)
