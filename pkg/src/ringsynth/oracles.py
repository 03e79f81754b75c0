"""Exhaustive checks of the residue tables and the pairing lemmas.

Every check enumerates a box of lifts large enough to hit each residue
class several times, so both the tables and the well-definedness of the
reductions are exercised.
"""
from __future__ import annotations

from itertools import product

from .linalg import KERNELS, RingMatrix, matpow
from .rings import ISQRT2, ONE_PLUS_I, RingInt, RingScalar, RingTag, residue, scalar_tags
from .synth import reduce_pair_gaussian, reduce_pair_imaginary, reduce_quadruple_integral

LIFT = range(-5, 6)


def zsqrt2(a, b):
    return RingScalar(RingInt(a, b, 0, -b))


def zisqrt2(a, b):
    return RingScalar(RingInt(a, b, 0, b))


def zi(a, b):
    return RingScalar(RingInt(a, 0, b, 0))


# name -> (element constructor, modulus, ring, listed representatives as (x, y) coordinates)
RESIDUE_TABLES = {
    "Z[sqrt2]/(2)": (zsqrt2, "2", RingTag.Zsqrt2, [(0, 0), (1, 0), (0, 1), (1, 1)]),
    "Z[i sqrt2]/(2)": (zisqrt2, "2", RingTag.Zisqrt2, [(0, 0), (1, 0), (0, 1), (1, 1)]),
    "Z[i sqrt2]/(2 i sqrt2)": (zisqrt2, "2isqrt2", RingTag.Zisqrt2,
                               [(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (2, 1), (3, 1)]),
    "Z[i]/(2)": (zi, "2", RingTag.Zi, [(0, 0), (1, 0), (0, 1), (1, 1)]),
    "Z[i]/(1+i)": (zi, "1+i", RingTag.Zi, [(0, 0), (1, 0)]),
}

_MODULI = {"2": RingScalar(2), "4": RingScalar(4), "2isqrt2": ISQRT2 * 2, "1+i": ONE_PLUS_I}


def _divides(m: RingScalar, x: RingScalar, ring) -> bool:
    """m | x inside `ring`: x m^dag / |m|^2 must have integer coordinates in the ring."""
    if not x:
        return True
    nrm = m * m.conj()
    if nrm.k != 0:
        raise ValueError("modulus norm is not an integer")
    n = nrm.a
    q = x * m.conj()
    c = (q.a, q.b, q.c, q.d)
    if q.k != 0 or any(v % n for v in c):
        return False
    return ring in scalar_tags(RingScalar(RingInt(*(v // n for v in c))))


def check_residue_tables():
    """(name, ok, detail) for each quotient ring table."""
    out = []
    for name, (make, mod, ring, listed) in RESIDUE_TABLES.items():
        reps = {make(*xy).num for xy in listed}
        seen = set()
        ok = True
        for a, b in product(LIFT, LIFT):
            x = make(a, b)
            r = residue(x, mod, ring).rep
            seen.add(r)
            if r not in reps or not _divides(_MODULI[mod], x - RingScalar(r), ring):
                ok = False
        out.append((name, ok and seen == reps, "%d classes" % len(seen)))
    # Z/(4) for the integral lemma
    seen = {residue(RingScalar(a), "4").rep for a in range(-9, 10)}
    out.append(("Z/(4)", seen == {RingInt(k) for k in range(4)}, "%d classes" % len(seen)))
    return out


def _class(x, mod, ring):
    return residue(x, mod, ring).rep


def check_zisqrt2_facts():
    """The norm and sign facts for Z[i sqrt2] modulo 2 and 2 i sqrt2."""
    one, three = RingInt(1), RingInt(3)
    one_i, three_i = zisqrt2(1, 1).num, zisqrt2(3, 1).num
    odd_classes = {one, three, one_i, three_i}
    ok_norm = ok_odd = ok_sign = True
    for a, b in product(LIFT, LIFT):
        u = zisqrt2(a, b)
        n = u * u.conj()
        r = _class(n, "2", RingTag.Zisqrt2)
        ok_norm &= r in (RingInt(0), RingInt(1))
        c = _class(u, "2isqrt2", RingTag.Zisqrt2)
        if r == RingInt(1):
            ok_odd &= c in odd_classes
        m = _class(-u, "2isqrt2", RingTag.Zisqrt2)
        ok_sign &= (c == three) == (m == one)
        ok_sign &= (c == three_i) == (m == one_i)
    return [("u^dag u = 0 or 1 mod 2 in Z[i sqrt2]", ok_norm, ""),
            ("odd norm gives 1, 3, 1+i sqrt2, 3+i sqrt2 mod 2 i sqrt2", ok_odd, ""),
            ("u = 3 iff -u = 1, u = 3+i sqrt2 iff -u = 1+i sqrt2", ok_sign, "")]


def check_zi_facts():
    ok_sq = ok_i = True
    i = zi(0, 1)
    for a, b in product(LIFT, LIFT):
        u = zi(a, b)
        c = _class(u, "2", RingTag.Zi)
        if _class(u * u, "2", RingTag.Zi) == RingInt(1):
            ok_sq &= c in (RingInt(1), RingInt(0, 0, 1, 0))
        ok_i &= (c == RingInt(0, 0, 1, 0)) == (_class(i * u, "2", RingTag.Zi) == RingInt(1))
    return [("u^2 = 1 mod 2 in Z[i] gives u = 1 or i", ok_sq, ""),
            ("u = i iff iu = 1 mod 2 in Z[i]", ok_i, "")]


def check_integral_vector():
    """All patterns u_k mod 8 in {1,3,5,7}^4, with two lifts each."""
    count = 0
    for us in product((1, 3, 5, 7), repeat=4):
        for shift in (0, 8, -16):
            m, out = reduce_quadruple_integral(*(u + shift for u in us))
            signed = [u + shift if e == 0 else -(u + shift) for u, e in zip(us, m)]
            if any(s % 4 != 1 for s in signed) or any(o % 2 for o in out):
                return [("integral quadruple lemma", False, "pattern %r" % (us,))]
            count += 1
    return [("integral quadruple lemma", True, "%d vectors" % count)]


def _odd_gaussians():
    return [zi(a, b) for a, b in product(range(-2, 4), repeat=2) if (a + b) % 2 == 1]


def check_gaussian_vector():
    count = 0
    ok = True
    for u1, u2 in product(_odd_gaussians(), repeat=2):
        for mx in (3, 1):
            m, (y1, y2) = reduce_pair_gaussian(u1, u2, mx)
            ok &= all(_divides(ONE_PLUS_I, y, RingTag.Zi) for y in (y1, y2))
            count += 1
    return [("Gaussian pair lemma", ok, "%d pairs" % count)]


def _prefix_matrix(m0, m1, m2, m3):
    P = RingMatrix.identity(2)
    if m3:
        P = KERNELS["X2"] @ P
    P = RingMatrix([[(-1) ** m1, 0], [0, (-1) ** m2]]) @ P
    return matpow(KERNELS["F2"], m0) @ P


def brute_force_prefix(u1, u2):
    """Lexicographically least prefix reducing (u1, u2), found by plain search."""
    for m in sorted(product(range(4), (0, 1), (0, 1), (0, 1))):
        P = _prefix_matrix(*m)
        y = [P.rows[r][0] * u1 + P.rows[r][1] * u2 for r in range(2)]
        if all(_divides(ISQRT2, t, RingTag.Zisqrt2) for t in y):
            return m
    return None


def check_imaginary_vector():
    """All admissible pairs over Z[i sqrt2]/(2 i sqrt2), with several lifts."""
    odd = [(1, 0), (3, 0), (1, 1), (3, 1)]
    lifts = [(0, 0), (4, 0), (0, 2), (-4, 2)]
    count = 0
    for (p1, p2) in product(odd, repeat=2):
        for l1, l2 in product(lifts, repeat=2):
            u1 = zisqrt2(p1[0] + l1[0], p1[1] + l1[1])
            u2 = zisqrt2(p2[0] + l2[0], p2[1] + l2[1])
            want = brute_force_prefix(u1, u2)
            if want is None:
                return [("imaginary pair lemma", False, "no prefix for %s, %s" % (u1, u2))]
            got, _ = reduce_pair_imaginary(u1, u2)
            if tuple(got) != want:
                return [("imaginary pair lemma", False, "prefix %r != %r" % (got, want))]
            count += 1
    return [("imaginary pair lemma", True, "%d pairs" % count)]


def run_oracles():
    out = []
    out += check_residue_tables()
    out += check_zisqrt2_facts()
    out += check_zi_facts()
    out += check_integral_vector()
    out += check_gaussian_vector()
    out += check_imaginary_vector()
    return out


__all__ = ["run_oracles", "brute_force_prefix", "RESIDUE_TABLES"]
