"""Synthesize random unitaries for each gate set, then lower the word to a circuit.

The synthesis word W satisfies W V = I; lowering W^-1 gives a circuit for V
that borrows at most one clean ancilla.
"""
from ringsynth import GATESETS, evaluate
from ringsynth.lowering import compile_unitary
from ringsynth.randomgen import random_unitary

for name, gs in GATESETS.items():
    V = random_unitary(name, 2, 20, seed=5)
    res, circ = compile_unitary(V, name, "one")
    ev = evaluate(circ)
    print("%-9s %-18s generators %3d  gates %4d  ancilla %d  exact %s"
          % (name, gs.label, len(res.word.ops), len(circ), circ.n_ancilla, ev.matrix == V))

# the lde trace of each column strictly decreases to 0
V = random_unitary("REAL", 3, 25, seed=11)
res, _ = compile_unitary(V, "REAL")
for col, seq in sorted(res.lde_sequences().items()):
    print("column", col, " -> ".join(map(str, seq)))

# first few gates of a circuit in the text format
from ringsynth.circuit import serialize
_, circ = compile_unitary(random_unitary("IMAG", 2, 6, seed=2), "IMAG")
print("\n".join(serialize(circ).splitlines()[:8]))
