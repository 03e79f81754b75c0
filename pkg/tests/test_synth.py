import pytest

from ringsynth.circuit import Circuit, Gate, full_matrix
from ringsynth.errors import DeterminantError, NotUnitaryError, UnsupportedError
from ringsynth.gatesets import GATESETS
from ringsynth.linalg import MAT_T, RingMatrix, det_exact, embed, from_ints, matrix_tags
from ringsynth.randomgen import random_word_unitary, with_phase_defect
from ringsynth.rings import I, ISQRT2, ONE, ONE_PLUS_I, SQRT2
from ringsynth.synth import (SynthRequest, reduce_pair_gaussian, reduce_pair_imaginary, reduce_pair_real,
                             reduce_quadruple_integral, synthesize)


def diag(entries):
    n = len(entries)
    return RingMatrix([[entries[r] if r == c else 0 for c in range(n)] for r in range(n)])


def check_result(res, V):
    assert res.word.matrix() @ V == RingMatrix.identity(V.nrows)
    for seq in res.lde_sequences().values():
        assert all(a > b for a, b in zip(seq, seq[1:])), seq


def test_integral_quadruple():
    assert reduce_quadruple_integral(5, 3, 7, 1)[0] == (0, 1, 1, 0)
    assert reduce_quadruple_integral(1, 1, 1, 1) == ((0, 0, 0, 0), (2, 0, 0, 0))


def test_real_pair():
    assert reduce_pair_real(ONE, ONE) == (SQRT2, 0)


def test_imaginary_pair():
    m, y = reduce_pair_imaginary(ONE, ONE)
    assert m[0] == 2 and y == (ISQRT2, 0)
    m, y = reduce_pair_imaginary(ONE + ISQRT2, ONE)
    assert m[0] == 1 and y == (ISQRT2, ISQRT2)


def test_gaussian_pair():
    assert reduce_pair_gaussian(ONE, ONE) == ((0, 0), (ONE_PLUS_I, 0))
    assert reduce_pair_gaussian(ONE, I)[0] == (0, 3)
    assert reduce_pair_gaussian(I, I)[0] == (3, 3)


@pytest.mark.parametrize("name", list(GATESETS))
def test_random_round_trips(name, rng):
    for n in (1, 2, 3):
        for _ in range(6):
            V = random_word_unitary(name, n, 25, rng)
            res = synthesize(SynthRequest(V, name))
            check_result(res, V)
            for op in res.word.ops:
                assert GATESETS[name].ring in matrix_tags(embed(op, V.nrows))


def test_auto_gateset_matches_ring():
    V = full_matrix(Circuit(2, gates=[Gate("F", (1,)), Gate("CX", (1, 2))]))
    res = synthesize(SynthRequest(V))
    assert res.gateset.tag == "IMAG"
    check_result(res, V)


def test_permutation_only_for_integral():
    V = full_matrix(Circuit(3, gates=[Gate("CCX", (1, 2, 3))]))
    res = synthesize(SynthRequest(V, "INT"))
    assert {op.kind for op in res.word.ops} <= {"X2"}
    assert not res.trace
    check_result(res, V)


def test_rejections():
    with pytest.raises(UnsupportedError):
        synthesize(SynthRequest(MAT_T))
    with pytest.raises(NotUnitaryError):
        synthesize(SynthRequest(from_ints([[1, 1], [0, 1]])))
    F = full_matrix(Circuit(1, gates=[Gate("F", (1,))]))
    with pytest.raises(UnsupportedError):
        synthesize(SynthRequest(F, "REAL"))


def test_ancilla_free_z2():
    V = diag([ONE] * 14 + [-ONE, -ONE])
    res = synthesize(SynthRequest(V, "IMAG", "ancilla_free"))
    assert res.ancilla_free
    assert [op.kind for op in res.word.ops] == ["Z2"]
    check_result(res, V)


def test_ancilla_free_iz():
    V = diag([I, -I] + [ONE] * 14)
    res = synthesize(SynthRequest(V, "GAUSS", "ancilla_free"))
    assert {op.kind for op in res.word.ops} == {"IZ2"}
    check_result(res, V)


@pytest.mark.parametrize("name,kinds", [("IMAG", {"XZ2", "ZX2", "FZ2", "ZF2", "Z2"}),
                                        ("GAUSS", {"IZ2", "IX2", "WSH2", "WHS2"})])
def test_ancilla_free_random(name, kinds, rng):
    for _ in range(3):
        V = random_word_unitary(name, 4, 30, rng)
        if det_exact(V) != ONE:
            with pytest.raises(DeterminantError):
                synthesize(SynthRequest(V, name, "ancilla_free"))
            continue
        res = synthesize(SynthRequest(V, name, "ancilla_free"))
        assert {op.kind for op in res.word.ops} <= kinds
        check_result(res, V)


def test_determinant_rejected():
    V = with_phase_defect(RingMatrix.identity(16))
    with pytest.raises(DeterminantError):
        synthesize(SynthRequest(V, "IMAG", "ancilla_free"))


def test_small_dim_ancilla_free_falls_back():
    F = full_matrix(Circuit(1, gates=[Gate("F", (1,))]))
    res = synthesize(SynthRequest(F, "IMAG", "ancilla_free"))
    assert not res.ancilla_free
    check_result(res, F)
