import random

import pytest

from ringsynth.circuit import Circuit, Gate, evaluate, full_matrix
from ringsynth.errors import UnsupportedError
from ringsynth.gatesets import GATESETS
from ringsynth.linalg import ARITY, KERNELS, MAT_X, MAT_Z, ORDERS, GeneratorWord, MultiLevelOp, RingMatrix, embed
from ringsynth.lowering import (Seq, _TEMPLATES, af_fz, af_xz, af_zf, af_zx, compile_unitary, control_extend,
                                invert_circuit, lower_generator, lower_permutation, lower_word, mcx_dirty)
from ringsynth.randomgen import random_circuit, random_word_unitary
from ringsynth.rings import omega_pow

KINDS = {
    "INT": ["X2", "NEG1", "HH4"],
    "SUPINT": ["X2", "NEG1", "HH4", "GLOBAL_IH"],
    "REAL": ["X2", "NEG1", "H2", "HH4"],
    "IMAG": ["X2", "NEG1", "F2", "XZ2", "ZX2", "FZ2", "ZF2", "Z2"],
    "GAUSS": ["X2", "NEG1", "I4", "WH2", "IZ2", "IX2", "WSH2", "WHS2"],
    "SUPGAUSS": ["X2", "NEG1", "I4", "WH2", "GLOBAL_OMEGA"],
}


def controlled(K, n_ctrl):
    """C^k K on n_ctrl + log2(dim K) wires, controls first."""
    N = K.nrows << n_ctrl
    rows = [[1 if r == c else 0 for c in range(N)] for r in range(N)]
    M = RingMatrix(rows)
    off = N - K.nrows
    out = [list(r) for r in M.rows]
    for r in range(K.nrows):
        for c in range(K.nrows):
            out[off + r][off + c] = K[r, c]
    return RingMatrix(out)


def seq_matrix(seq, n):
    return full_matrix(Circuit(n, gates=seq.gates)).scale(omega_pow(seq.ph))


def test_mcx_dirty_k4():
    gates = mcx_dirty([1, 2, 3, 4], 5, 6)
    assert {g.name for g in gates} <= {"X", "CX", "CCX"}
    want = controlled(MAT_X, 4).kron(RingMatrix.identity(2))
    assert full_matrix(Circuit(6, gates=gates)) == want


@pytest.mark.parametrize("k", [3, 5, 6])
def test_mcx_dirty_sizes(k):
    gates = mcx_dirty(list(range(1, k + 1)), k + 1, k + 2)
    want = controlled(MAT_X, k).kron(RingMatrix.identity(2))
    assert full_matrix(Circuit(k + 2, gates=gates)) == want


def test_mcx_needs_spare():
    with pytest.raises(UnsupportedError):
        mcx_dirty([1, 2, 3], 4)


def test_control_extend_ccz():
    tmpl = _TEMPLATES["IMAG"]["Z"]
    seq = control_extend(tmpl, (1, 2), (3,), clean=4)
    c = Circuit(3, 1, "clean", seq.gates, omega_pow(seq.ph))
    assert evaluate(c).matrix == controlled(MAT_Z, 2)


def test_seq_inverse():
    rng = random.Random(4)
    c = random_circuit("IMAG", 2, 20, rng)
    s = Seq(c.gates, 3)
    inv = s.inverse()
    assert {g.name for g in inv.gates} <= GATESETS["IMAG"].gates
    assert seq_matrix(inv, 2) @ seq_matrix(s, 2) == RingMatrix.identity(4)


def test_permutations(rng):
    for n in (1, 2, 3, 4):
        N = 1 << n
        for _ in range(3):
            p = list(range(N))
            rng.shuffle(p)
            P = RingMatrix([[1 if p[c] == r else 0 for c in range(N)] for r in range(N)])
            c = lower_permutation(P)
            assert c.names() <= {"X", "CX", "CCX"}
            assert evaluate(c).matrix == P


def test_permutation_rejects_non_permutation():
    with pytest.raises(ValueError):
        lower_permutation(embed(MultiLevelOp("NEG1", [1], 1, 4)))


@pytest.mark.parametrize("gs", list(KINDS))
def test_every_generator_kind(gs):
    rng = random.Random(hash(gs) % 1000)
    for kind in KINDS[gs]:
        for n in (1, 2, 3):
            ar = ARITY.get(kind, 0)
            if ar > (1 << n) or (kind in ("WSH2", "WHS2") and n < 3):
                continue
            for _ in range(2):
                levels = rng.sample(range(1, (1 << n) + 1), ar)
                e = rng.randrange(1, ORDERS[kind])
                op = MultiLevelOp(kind, levels, e, 1 << n)
                c = lower_generator(op, gs, "one_clean", n)
                assert c.names() <= GATESETS[gs].gates, (kind, c.names())
                ev = evaluate(c, strict=False)
                assert ev.ok
                assert ev.matrix == embed(op, 1 << n), (gs, kind, levels, e)


def test_ring_mismatch():
    with pytest.raises(UnsupportedError):
        lower_generator(MultiLevelOp("F2", [1, 2], 1, 4), "REAL")


def test_ancilla_free_kernels():
    # 3 wires: two controls and a target, no extra wire
    for fn, K in ((af_zx, MAT_Z @ MAT_X), (af_xz, MAT_X @ MAT_Z)):
        s = fn((1, 2), 3)
        assert seq_matrix(s, 3) == controlled(K, 2)
    F = KERNELS["F2"]
    for fn, K in ((af_zf, MAT_Z @ F), (af_fz, F @ MAT_Z)):
        s = fn((1, 2), 3)
        assert seq_matrix(s, 3) == controlled(K, 2)


@pytest.mark.parametrize("gs,kind", [("IMAG", "XZ2"), ("IMAG", "ZF2"), ("GAUSS", "IX2"), ("GAUSS", "WSH2")])
def test_ancilla_free_generators(gs, kind, rng):
    for n in (2, 3):
        if kind == "WSH2" and n < 3:
            continue
        levels = rng.sample(range(1, (1 << n) + 1), 2)
        op = MultiLevelOp(kind, levels, 1, 1 << n)
        c = lower_generator(op, gs, "none", n)
        assert c.n_ancilla == 0
        assert c.names() <= GATESETS[gs].gates
        assert full_matrix(c) == embed(op, 1 << n)


@pytest.mark.parametrize("gs", list(KINDS))
def test_compile_round_trip(gs, rng):
    for n in (1, 2):
        V = random_word_unitary(gs, n, 15, rng)
        res, c = compile_unitary(V, gs)
        ev = evaluate(c)
        assert ev.matrix == V
        assert c.names() <= GATESETS[gs].gates


def test_invert_circuit(rng):
    c = random_circuit("GAUSS", 2, 25, rng)
    inv = invert_circuit(c, "GAUSS")
    assert inv.names() <= GATESETS["GAUSS"].gates
    assert full_matrix(inv) @ full_matrix(c) == RingMatrix.identity(4)


def test_lower_word_order():
    ops = [MultiLevelOp("F2", [1, 2], 1, 4), MultiLevelOp("X2", [2, 3], 1, 4)]
    w = GeneratorWord(4, ops)
    c = lower_word(w, "IMAG")
    assert evaluate(c).matrix == w.matrix()
