"""Exact scalars and the ring lattice.

Every number here is a + b w + c w^2 + d w^3 over sqrt2^k, with w = e^(i pi/4).
"""
from ringsynth.rings import HALF, I, INV_SQRT2, ISQRT2, OMEGA, SQRT2, membership, parse_scalar, residue
from ringsynth.linalg import KERNELS, MAT_H, MAT_HH, MAT_S, MAT_T, MAT_WH, classify_matrix, lde

print(OMEGA * OMEGA == I)              # w^2 = i
print(SQRT2 * SQRT2 == 2)
print(INV_SQRT2 * INV_SQRT2 == HALF)   # normalized form num=1, k=2

# smallest ring containing a scalar
for s in ["1/2", "rt2", "irt2", "w", "1/rt2", "(1,0,0,0)/rt2^3"]:
    x = parse_scalar(s)
    print("%-16s -> %s" % (s, membership(x).value))

# residues used by the pairing lemmas
print(residue(3 + 2 * SQRT2, "2").rep)               # 1
print(residue(5 + 3 * ISQRT2, "2isqrt2").rep)        # 1 + i sqrt2

# gates and the ring they live in
for name, M in [("HH", MAT_HH), ("H", MAT_H), ("F", KERNELS["F2"]), ("S", MAT_S),
                ("wH", MAT_WH), ("T", MAT_T)]:
    print("%-3s %s" % (name, classify_matrix(M).value))

# least denominator exponents
print(lde(MAT_HH, "2"), lde(MAT_H, "sqrt2"), lde(KERNELS["F2"], "isqrt2"), lde(MAT_WH, "1+i"))
