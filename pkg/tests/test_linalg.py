import pytest

from ringsynth.errors import DomainError, NotUnitaryError, ParseError
from ringsynth.linalg import (KERNELS, MAT_H, MAT_HH, MAT_S, MAT_T, MAT_WH, GeneratorWord, MultiLevelOp,
                              RingMatrix, basis, classify_matrix, dagger, det_exact, embed, format_matrix,
                              format_word, from_ints, is_unitary, lde, matrix_tags, mul, parse_matrix,
                              parse_word)
from ringsynth.rings import I, ONE, ZERO, RingTag, omega_pow

F = KERNELS["F2"]


def test_embed_examples():
    P = embed(MultiLevelOp("X2", [1, 3], 1, 8))
    assert P[0, 2] == ONE and P[2, 0] == ONE and P[1, 1] == ONE and P[0, 0] == ZERO
    assert embed(MultiLevelOp("HH4", [1, 2, 3, 4], 1, 4)) == MAT_HH
    V = embed(MultiLevelOp("F2", [1, 3], 1, 3))
    assert V[0, 0] == F[0, 0] and V[0, 2] == F[0, 1] and V[2, 0] == F[1, 0] and V[2, 2] == F[1, 1]
    assert V[1, 1] == ONE


def test_basic_products():
    assert is_unitary(F)
    assert mul(MAT_H, MAT_H) == RingMatrix.identity(2)
    assert dagger(MAT_S) == RingMatrix([[1, 0], [0, -I]])
    assert basis(3, 2).column(0) == [ZERO, ONE, ZERO]


def test_classify_examples():
    assert classify_matrix(MAT_HH) == RingTag.D
    assert classify_matrix(MAT_H) == RingTag.Z_over_sqrt2
    assert classify_matrix(F) == RingTag.Disqrt2
    assert classify_matrix(MAT_T) == RingTag.Domega
    assert classify_matrix(MAT_S) == RingTag.Di
    assert classify_matrix(MAT_WH) == RingTag.Di
    # iH is in both D[i sqrt2] and Z[i]/sqrt2; the tie goes to D[i sqrt2]
    assert classify_matrix(MAT_H.scale(I)) == RingTag.Disqrt2


def test_super_form_needs_common_exponent():
    M = embed(MultiLevelOp("H2", [1, 2], 1, 4))
    assert RingTag.Z_over_sqrt2 not in matrix_tags(M)
    assert classify_matrix(M) == RingTag.Dsqrt2


def test_not_unitary():
    with pytest.raises(NotUnitaryError, match=r"\[1,2\]"):
        classify_matrix(from_ints([[1, 1], [0, 1]]))


def test_lde():
    assert lde(MAT_HH, "2") == 1
    assert lde(MAT_H, "sqrt2") == 1
    assert lde(F, "isqrt2") == 2
    assert lde(MAT_WH, "1+i") == 1
    assert lde(MAT_H, "sqrt2", RingTag.Z) == 1
    assert lde(RingMatrix.identity(3), "2") == 0
    with pytest.raises(DomainError):
        lde(MAT_H, "2")


def test_det():
    assert det_exact(F) == -ONE
    assert det_exact(MAT_H) == -ONE
    assert det_exact(MAT_WH) == -I
    assert det_exact(embed(MultiLevelOp("ZF2", [2, 5], 1, 8))) == ONE


def test_word_product_and_inverse(rng):
    kinds = ["X2", "H2", "F2", "NEG1", "I4", "WH2", "HH4", "XZ2"]
    from ringsynth.linalg import ARITY, ORDERS
    ops = []
    for _ in range(12):
        k = rng.choice(kinds)
        ops.append(MultiLevelOp(k, rng.sample(range(1, 9), ARITY[k]), rng.randrange(ORDERS[k]), 8))
    w = GeneratorWord(8, ops)
    M = RingMatrix.identity(8)
    for op in ops:
        M = M @ embed(op)
    assert w.matrix() == M
    assert w.inverse().matrix() @ M == RingMatrix.identity(8)


def test_global_kinds():
    w = GeneratorWord(4, [MultiLevelOp("GLOBAL_IH"), MultiLevelOp("GLOBAL_OMEGA", exponent=3)])
    assert w.matrix() == RingMatrix.identity(2).kron(MAT_H).scale(omega_pow(3))


def test_text_round_trip():
    M = embed(MultiLevelOp("F2", [1, 2], 3, 4))
    assert parse_matrix(format_matrix(M)) == M
    w = GeneratorWord(4, [MultiLevelOp("F2", [1, 2], 3), MultiLevelOp("X2", [2, 4])])
    assert parse_word(format_word(w)) == w
    with pytest.raises(ParseError, match="line 2"):
        parse_matrix("dim 1 1\nfoo\n")
