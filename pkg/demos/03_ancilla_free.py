"""Ancilla-free synthesis at dimension 16.

With four qubits every circuit over {X,CX,CCX,F} or {X,CX,CCX,wH,S} has
determinant 1, and conversely every determinant-1 unitary over the ring
can be written without an extra wire.
"""
import time

from ringsynth import DeterminantError, SynthRequest, det_exact, evaluate, synthesize
from ringsynth.lowering import compile_unitary
from ringsynth.randomgen import random_unitary, with_phase_defect

for name in ("IMAG", "GAUSS"):
    V = random_unitary(name, 4, 20, seed=3)
    print(name, "det", det_exact(V))
    res = synthesize(SynthRequest(V, name, "ancilla_free"))
    kinds = sorted({op.kind for op in res.word.ops})
    print("  %d generators of kinds %s" % (len(res.word.ops), kinds))

    t = time.time()
    _, circ = compile_unitary(V, name, "none")
    ok = evaluate(circ).matrix == V
    print("  circuit: %d gates, %d ancillas, exact %s (%.1f s)" % (len(circ), circ.n_ancilla, ok, time.time() - t))

    # a single -1 (or i) on the diagonal breaks the determinant condition
    W = with_phase_defect(V, "NEG1" if name == "IMAG" else "I4")
    try:
        synthesize(SynthRequest(W, name, "ancilla_free"))
    except DeterminantError as e:
        print("  rejected:", e)
