"""Seeded random circuits and unitaries over a gate set."""
from __future__ import annotations

import os
import random

from .circuit import GATE_SPECS, Circuit, Gate, evaluate, gate_arity
from .gatesets import get_gateset
from .linalg import MultiLevelOp, RingMatrix, embed


def resolve_seed(seed=None) -> int:
    if seed is not None:
        return int(seed)
    env = os.environ.get("RINGSYNTH_SEED")
    return int(env) if env else 0


def random_circuit(gateset, n: int, length: int, rng: random.Random) -> Circuit:
    gs = get_gateset(gateset)
    names = sorted(g for g in gs.gates if gate_arity(g) <= n)
    c = Circuit(n)
    for _ in range(length):
        name = rng.choice(names)
        wires = rng.sample(range(1, n + 1), gate_arity(name))
        c.append(Gate(name, wires))
    return c


def random_unitary(gateset, n: int, length: int, seed=None) -> RingMatrix:
    rng = random.Random(resolve_seed(seed))
    length = rng.randint(0, length) if length < 0 else length
    return evaluate(random_circuit(gateset, n, length, rng)).matrix


def random_word_unitary(gateset, n: int, length: int, rng: random.Random) -> RingMatrix:
    """Unitary of a random circuit with 0..length gates (used by the property tests)."""
    return evaluate(random_circuit(gateset, n, rng.randint(0, length), rng)).matrix


def with_phase_defect(V: RingMatrix, kind="NEG1", exponent=1, level=None) -> RingMatrix:
    """V multiplied by a one-level operator, to build determinant != 1 instances."""
    level = level or V.nrows
    return embed(MultiLevelOp(kind, [level], exponent, V.nrows)) @ V


__all__ = ["random_circuit", "random_unitary", "random_word_unitary", "resolve_seed",
           "with_phase_defect", "GATE_SPECS"]
