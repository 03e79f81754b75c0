"""The circuit identities behind the lowering, checked exactly."""
from ringsynth.identities import IDENTITIES

for ident in IDENTITIES:
    ok = all(ident.check(n) for n in (ident.n_min, ident.n_min + 1))
    print("%-5s %s%s" % ("ok" if ok else "FAIL", ident.name, ("   [%s]" % ident.note) if ident.note else ""))
