import pytest
from hypothesis import given, strategies as st

from ringsynth.rings import (HALF, I, INV_SQRT2, ISQRT2, OMEGA, ONE, SQRT2, ZERO, RingInt, RingScalar,
                             RingTag, conjugate, divide_by_root2, format_scalar, in_ring, membership,
                             omega_pow, parse_scalar, residue, residue_facts, ringint_arith, scalar_tags,
                             tag_leq)

small = st.integers(-6, 6)
ringints = st.builds(RingInt, small, small, small, small)
scalars = st.builds(lambda a, k: RingScalar(a, k), ringints, st.integers(0, 5))


def zisqrt2(a, b):
    return RingInt(a, b, 0, b)


def test_omega_arithmetic():
    w = RingInt(0, 1, 0, 0)
    assert ringint_arith(w, w ** 3, "mul") == RingInt(-1, 0, 0, 0)
    one_plus = RingInt(1, 1, 0, 0)
    one_minus = RingInt(1, -1, 0, 0)
    assert ringint_arith(one_plus, one_minus, "mul") == RingInt(1, 0, -1, 0)
    r2 = RingInt(0, 1, 0, -1)
    assert r2 * r2 == RingInt(2, 0, 0, 0)


def test_conjugate_examples():
    assert conjugate(RingInt(0, 0, 1, 0)) == RingInt(0, 0, -1, 0)
    r2 = RingInt(0, 1, 0, -1)
    assert conjugate(r2) == r2
    assert conjugate(RingInt(0, 1, 0, 0)) == RingInt(0, 0, 0, -1)


def test_divide_by_root2():
    assert divide_by_root2(RingInt(2)) == RingInt(0, 1, 0, -1)
    assert divide_by_root2(RingInt(1, 0, 1, 0)) == RingInt(0, 1, 0, 0)
    assert divide_by_root2(RingInt(1)) is None


def test_scalar_normalization():
    s = INV_SQRT2 + INV_SQRT2
    assert (s.num, s.k) == (RingInt(0, 1, 0, -1), 0)
    h = INV_SQRT2 * INV_SQRT2
    assert (h.num, h.k) == (RingInt(1), 2)
    assert h == HALF


def test_membership_examples():
    assert membership(HALF) == RingTag.D
    assert membership(ISQRT2) == RingTag.Zisqrt2
    assert membership(SQRT2) == RingTag.Zsqrt2
    assert membership(I) == RingTag.Zi
    # w lies in Z[w] but in none of D[i], D[sqrt2], D[i sqrt2]
    assert membership(OMEGA) == RingTag.Zomega
    for t in (RingTag.Di, RingTag.Dsqrt2, RingTag.Disqrt2):
        assert not in_ring(OMEGA, t)
    assert membership(OMEGA * INV_SQRT2) == RingTag.Di
    assert membership(OMEGA * HALF) == RingTag.Domega


def test_super_forms():
    assert RingTag.Z_over_sqrt2 in scalar_tags(INV_SQRT2)
    assert RingTag.Zi_over_sqrt2 in scalar_tags(I * INV_SQRT2)
    assert RingTag.Z_over_sqrt2 not in scalar_tags(I * INV_SQRT2)
    assert RingTag.Z_over_sqrt2 not in scalar_tags(ONE + INV_SQRT2)


def test_lattice_order():
    assert tag_leq(RingTag.Z, RingTag.Domega)
    assert tag_leq(RingTag.D, RingTag.Z_over_sqrt2)
    assert tag_leq(RingTag.Z_over_sqrt2, RingTag.Dsqrt2)
    assert not tag_leq(RingTag.Disqrt2, RingTag.Di)


def test_residue_examples():
    assert residue(RingScalar(RingInt(3, 2, 0, -2)), "2").rep == RingInt(1)
    r = residue(RingScalar(zisqrt2(5, 3)), "2isqrt2").rep
    assert r == zisqrt2(1, 1)
    assert residue(RingScalar(-1), "2isqrt2").rep == RingInt(3)
    assert residue(RingScalar(-1), "2irt2").rep == RingInt(3)


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_residue_soundness_zisqrt2(a, b):
    x = RingScalar(zisqrt2(a, b))
    rep = residue(x, "2isqrt2").rep
    diff = x - RingScalar(rep)
    # (a + b i sqrt2) is divisible by 2 i sqrt2 iff a = 0 mod 4 and b even
    c = diff.num.c
    assert c[0] % 4 == 0 and c[1] % 2 == 0


def test_residue_facts():
    f = residue_facts(RingScalar(zisqrt2(3, 1)))
    assert f.odd and f.mod_2isqrt2 == zisqrt2(3, 1)
    g = residue_facts(I)
    assert g.gaussian_class == RingInt(0, 0, 1, 0)


def test_format_and_parse():
    for x in (ZERO, ONE, HALF, OMEGA, INV_SQRT2, -ISQRT2):
        assert parse_scalar(format_scalar(x)) == x
    assert parse_scalar("-1/rt2") == -INV_SQRT2
    assert parse_scalar("w") == OMEGA
    with pytest.raises(ValueError):
        parse_scalar("pi")


@given(ringints, ringints, ringints)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(ringints, ringints)
def test_conjugation_is_a_ring_map(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()


@given(scalars, scalars)
def test_scalar_field_ops(x, y):
    assert (x + y) - y == x
    assert (x * y).conj() == x.conj() * y.conj()
    assert x.mul_sqrt2_pow(3).mul_sqrt2_pow(-3) == x


@given(st.integers(0, 15))
def test_omega_powers(e):
    assert omega_pow(e) * omega_pow(-e) == ONE
    assert omega_pow(e + 8) == omega_pow(e)
