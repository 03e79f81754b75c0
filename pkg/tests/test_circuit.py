import random

import pytest

from ringsynth.circuit import Circuit, Gate, evaluate, expand_daggers, full_matrix, gate_matrix, parse, serialize
from ringsynth.errors import AncillaError, ParseError
from ringsynth.linalg import KERNELS, MAT_H, MAT_S, RingMatrix, from_ints
from ringsynth.randomgen import random_circuit
from ringsynth.rings import I, omega_pow


def test_cx_matrix():
    c = Circuit(2, gates=[Gate("CX", (1, 2))])
    assert full_matrix(c) == from_ints([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    # wire 1 is the most significant bit
    c = Circuit(2, gates=[Gate("X", (1,))])
    assert full_matrix(c).column(0)[2] == 1


def test_f_squared_is_ih():
    c = Circuit(1, gates=[Gate("F", (1,)), Gate("F", (1,))])
    assert full_matrix(c) == MAT_H.scale(I)


def test_f_from_clifford_t():
    names = "S H S T H S T H S".split()
    c = Circuit(1, gates=[Gate(nm, (1,)) for nm in reversed(names)], phase=omega_pow(-1))
    assert full_matrix(c) == KERNELS["F2"]


def test_dagger_expansion():
    c = Circuit(2, gates=[Gate("Sdg", (1,)), Gate("Fdg", (2,)), Gate("WHdg", (1,)), Gate("CX", (2, 1))])
    e = expand_daggers(c)
    assert "Sdg" not in e.names() and "Fdg" not in e.names()
    assert full_matrix(e) == full_matrix(c)
    assert full_matrix(Circuit(1, gates=[Gate("Sdg", (1,))])) == RingMatrix([[1, 0], [0, -I]])


def test_inverse():
    c = random_circuit("GAUSS", 3, 30, random.Random(3))
    assert full_matrix(c) @ full_matrix(c.inverse()) == RingMatrix.identity(8)


def test_gate_validation():
    with pytest.raises(ValueError):
        Gate("CX", (1,))
    with pytest.raises(ValueError):
        Gate("CCX", (1, 1, 2))
    with pytest.raises(ValueError):
        Circuit(2).append("X", 3)


def test_parse_errors():
    with pytest.raises(ParseError, match="line 2.*'Q'"):
        parse("qubits 2\nQ 1\n")
    with pytest.raises(ParseError, match="qubits"):
        parse("X 1\n")


def test_round_trip_100_gates():
    rng = random.Random(11)
    c = random_circuit("SUPGAUSS", 4, 100, rng)
    c.phase = omega_pow(3)
    text = serialize(c)
    assert parse(text) == c
    assert serialize(parse(text)) == text


def test_clean_ancilla_verdict():
    good = Circuit(1, 1, "clean", [Gate("CX", (1, 2)), Gate("CX", (1, 2))])
    assert evaluate(good).ok
    bad = Circuit(1, 1, "clean", [Gate("CX", (1, 2))])
    ev = evaluate(bad, strict=False)
    assert not ev.ok and "clean ancilla" in ev.message
    with pytest.raises(AncillaError):
        evaluate(bad)


def test_dirty_ancilla_verdict():
    good = Circuit(1, 1, "dirty", [Gate("CX", (2, 1)), Gate("CX", (2, 1))])
    assert evaluate(good).ok
    bad = Circuit(1, 1, "dirty", [Gate("CX", (2, 1))])
    assert not evaluate(bad, strict=False).ok


@pytest.mark.parametrize("gs", ["IMAG", "GAUSS", "SUPGAUSS", "REAL"])
def test_fused_evaluation_matches_gate_product(gs):
    c = random_circuit(gs, 3, 80, random.Random(len(gs)))
    c.gates += [Gate("F", (2,))] * 5 + [Gate("CX", (2, 3))] + [Gate("Sdg", (1,))] * 3
    M = RingMatrix.identity(8)
    for g in c.gates:
        M = gate_matrix(g, 3) @ M
    assert full_matrix(c) == M
