"""Catalogue of circuit identities used by the lowering, checked exactly.

Each identity is written as two lists of boxes.  A box is a kernel K with
control wires and target wires; it acts as K on the targets when every
control is 1.  Boxes are evaluated by an oracle that is independent of the
gate-level circuit code, so the catalogue also cross-checks circuit.py.

Identities that borrow a wire check the full matrix, so the borrowed wire
may hold any state.  Identities marked `clean` are compared only on the
columns where the clean wires are 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .linalg import KERNELS, MAT_H, MAT_HH, MAT_S, MAT_T, MAT_WH, MAT_X, MAT_Z, RingMatrix, dagger, matpow
from .rings import I, ONE, ZERO, RingScalar, omega_pow

F = KERNELS["F2"]
I2 = RingMatrix.identity(2)


def _p(*ms):
    out = ms[0]
    for m in ms[1:]:
        out = out @ m
    return out


ZXF = _p(MAT_Z, MAT_X, F)
IX = MAT_X.scale(I)
IZ = MAT_Z.scale(I)
WSH = _p(MAT_S, MAT_H).scale(omega_pow(1))
WHS = _p(MAT_H, MAT_S).scale(omega_pow(1))
XZ = _p(MAT_X, MAT_Z)
ZX = _p(MAT_Z, MAT_X)


def box(K, controls=(), targets=()):
    return (K, tuple(controls), tuple(targets))


def phase(x: RingScalar):
    return ("phase", x)


def apply_boxes(boxes, n: int, columns=None):
    """Rows of the product of the boxes (first box applied first)."""
    dim = 1 << n
    cols = list(range(dim)) if columns is None else list(columns)
    rows = [[ONE if cols[j] == r else ZERO for j in range(len(cols))] for r in range(dim)]
    for b in boxes:
        if b[0] == "phase":
            rows = [[b[1] * x for x in r] for r in rows]
            continue
        K, ctrls, tgts = b
        cmask = sum(1 << (n - w) for w in ctrls)
        tb = [1 << (n - w) for w in tgts]
        tmask = sum(tb)
        m = K.nrows
        for base in range(dim):
            if base & tmask or (base & cmask) != cmask:
                continue
            idx = []
            for v in range(m):
                s = base
                for i, bit in enumerate(tb):
                    if v >> (len(tb) - 1 - i) & 1:
                        s |= bit
                idx.append(s)
            sub = [rows[i] for i in idx]
            for r in range(m):
                acc = [ZERO] * len(cols)
                for c in range(m):
                    k = K.rows[r][c]
                    if k:
                        acc = [a + k * x for a, x in zip(acc, sub[c])]
                rows[idx[r]] = acc
    return rows


@dataclass
class Identity:
    name: str
    n_min: int
    build: Callable            # n -> (lhs boxes, rhs boxes)
    clean: Callable = None     # n -> tuple of clean wires
    note: str = ""
    sizes: tuple = field(default=())

    def check(self, n: int) -> bool:
        lhs, rhs = self.build(n)
        cols = None
        if self.clean is not None:
            cw = self.clean(n)
            cols = [c for c in range(1 << n) if not any(c >> (n - w) & 1 for w in cw)]
        return apply_boxes(lhs, n, cols) == apply_boxes(rhs, n, cols)


def _ctrl_split(n):
    """Controls 1..n-1 split into two nonempty groups, target n."""
    ctrls = tuple(range(1, n))
    p = len(ctrls) // 2
    return ctrls, ctrls[:p], ctrls[p:], n


def _mcz_f(n):
    ctrls, t = tuple(range(1, n)), n
    return ([box(MAT_Z, ctrls, [t])],
            [box(matpow(F, 2), [], [t]), box(MAT_X, ctrls, [t]), box(matpow(F, 6), [], [t])])


def _mcz_wh(n):
    # the last wire is borrowed, the target is n-1
    ctrls, t = tuple(range(1, n - 1)), n - 1
    return ([box(MAT_Z, ctrls, [t])],
            [box(MAT_WH, [], [t]), box(MAT_X, ctrls, [t]), box(dagger(MAT_WH), [], [t])])


def _zxf(n):
    ctrls, t = tuple(range(1, n)), n
    return ([box(ZXF, ctrls, [t])],
            [box(MAT_X, [], [t]), box(ZXF, [], [t]), box(MAT_X, ctrls, [t]),
             box(ZXF, [], [t]), box(MAT_X, [], [t])])


def _qzone(n):
    ctrls, t = tuple(range(1, n)), n
    head, last = ctrls[:-1], ctrls[-1]
    return ([box(ZX, ctrls, [t])],
            [box(MAT_X, head, [t]), box(matpow(F, 2), [last], [t]),
             box(MAT_X, head, [t]), box(matpow(F, 6), [last], [t])])


def _zf(n):
    ctrls, g1, g2, t = _ctrl_split(n)
    return ([box(_p(MAT_Z, F), ctrls, [t])],
            [box(MAT_X, g1, [t]), box(ZXF, g2, [t]), box(MAT_X, g1, [t]), box(ZXF, g2, [t]),
             box(MAT_Z, ctrls[:-1], [ctrls[-1]])])


def _fz(n):
    ctrls, g1, g2, t = _ctrl_split(n)
    return ([box(_p(F, MAT_Z), ctrls, [t])],
            [box(matpow(F, 2), [], [t]), box(ZXF, g2, [t]), box(MAT_X, g1, [t]),
             box(ZXF, g2, [t]), box(MAT_X, g1, [t]), box(XZ, ctrls, [t]),
             box(matpow(F, 6), [], [t])])


def _two_dirty_s(n):
    # controls 1..n-3, borrowed wires n-2 (a) and n-1, target n
    k = n - 3
    ctrls, a, t = tuple(range(1, k + 1)), n - 2, n
    return ([box(MAT_S, ctrls, [t])],
            [box(MAT_X, ctrls, [a]), box(MAT_S, [a], [t]), box(MAT_X, ctrls, [a]),
             box(dagger(MAT_S), [a], [t]), box(MAT_Z, ctrls + (a,), [t])])


def _ix(n):
    ctrls, t = tuple(range(1, n)), n
    c1, rest = ctrls[:1], ctrls[1:]
    return ([box(IX, ctrls, [t])],
            [box(MAT_WH, [], [t]), box(dagger(MAT_S), c1, [t]), box(IX, rest, [t]),
             box(MAT_S, c1, [t]), box(IX.scale(-ONE), rest, [t]), box(dagger(MAT_WH), [], [t])])


def _iz(n):
    ctrls, t = tuple(range(1, n)), n
    return ([box(IZ, ctrls, [t])],
            [box(MAT_WH, [], [t]), box(IX, ctrls, [t]), box(dagger(MAT_WH), [], [t])])


def _wsh(n):
    ctrls, t = tuple(range(1, n)), n
    g1, last = ctrls[:-1], ctrls[-1:]
    return ([box(WSH, ctrls, [t])],
            [box(dagger(WSH), g1, [t]), box(dagger(MAT_S), last, [t]), box(WSH, g1, [t]),
             box(MAT_S, last, [t]), box(IZ, ctrls, [t])])


def _whs(n):
    lhs, rhs = _wsh(n)
    t = n
    return ([box(WHS, lhs[0][1], [t])],
            [box(MAT_WH, [], [t])] + rhs + [box(dagger(MAT_WH), [], [t])])


def _collect(n):
    # C^k W with a clean ancilla (wire n); controls 1..n-2, target n-1
    ctrls, t, anc = tuple(range(1, n - 1)), n - 1, n
    return ([box(MAT_H, ctrls, [t])],
            [box(MAT_X, ctrls, [anc]), box(MAT_H, [anc], [t]), box(MAT_X, ctrls, [anc])])


def _mcx_dirty(n):
    # C^kX on wires 1..n-1 -> ... with wire n borrowed; k = n-2, target n-1
    from .lowering import mcx_dirty
    ctrls, t, d = tuple(range(1, n - 1)), n - 1, n
    rhs = [box(MAT_X, g.controls, g.targets) for g in mcx_dirty(ctrls, t, d)]
    return [box(MAT_X, ctrls, [t])], rhs


def _single(lhs, rhs):
    return lambda n: (lhs, rhs)


_F_MA = [box(MAT_S, [], [1]), box(MAT_H, [], [1]), box(MAT_S, [], [1]), box(MAT_T, [], [1]),
         box(MAT_H, [], [1]), box(MAT_S, [], [1]), box(MAT_T, [], [1]), box(MAT_H, [], [1]),
         box(MAT_S, [], [1]), phase(omega_pow(-1))]

IDENTITIES = [
    Identity("F^2 = iH", 1, _single([box(MAT_H, [], [1]), phase(I)],
                                    [box(F, [], [1]), box(F, [], [1])])),
    Identity("F = SHTSHTSHS w^-1", 1, _single([box(F, [], [1])], _F_MA)),
    Identity("w = SHSHSH", 1, _single([phase(omega_pow(1))],
                                      [box(MAT_H, [], [1]), box(MAT_S, [], [1])] * 3)),
    Identity("iX = (wH) S^2 (wH)", 1, _single([box(IX, [], [1])],
                                             [box(MAT_WH, [], [1]), box(MAT_S, [], [1]),
                                              box(MAT_S, [], [1]), box(MAT_WH, [], [1])])),
    Identity("(ZXF)^2 = I", 1, _single([], [box(ZXF, [], [1])] * 2)),
    Identity("X(ZXF)X(ZXF)X = ZXF", 1, _single(
        [box(ZXF, [], [1])],
        [box(MAT_X, [], [1]), box(ZXF, [], [1]), box(MAT_X, [], [1]), box(ZXF, [], [1]),
         box(MAT_X, [], [1])])),
    Identity("(ZXF)X(ZXF)X = -ZF", 1, _single(
        [box(_p(MAT_Z, F), [], [1]), phase(-ONE)],
        [box(MAT_X, [], [1]), box(ZXF, [], [1]), box(MAT_X, [], [1]), box(ZXF, [], [1])])),
    Identity("CZ from HH and one borrowed wire", 3, _single(
        [box(MAT_Z, [1], [2])],
        [box(MAT_HH, [], [2, 3]), box(MAT_X, [1], [2]), box(MAT_HH, [], [2, 3])])),
    Identity("C(HxH) from HH, CX, CCX and one borrowed wire", 4, _single(
        [box(MAT_HH, [1], [2, 3])],
        [box(MAT_HH, [], [3, 4]), box(MAT_X, [3], [2]), box(MAT_X, [1, 2], [3]), box(MAT_X, [3], [2]),
         box(MAT_HH, [], [3, 4]), box(MAT_X, [3], [2]), box(MAT_X, [1, 2], [3]), box(MAT_X, [3], [2])])),
    Identity("CS from CCX, wH, S and one borrowed wire", 3, _single(
        [box(MAT_S, [1], [2])],
        [box(MAT_S, [], [3]), box(MAT_X, [1, 2], [3]), box(MAT_WH, [], [3]), box(MAT_X, [1, 2], [3]),
         box(dagger(MAT_WH), [], [3]), box(dagger(MAT_S), [], [3]), box(MAT_X, [1, 2], [3])]),
        note="the S and S^dag boxes are swapped relative to the printed circuit"),
    Identity("printed CS circuit equals controlled S^dag", 3, _single(
        [box(dagger(MAT_S), [1], [2])],
        [box(dagger(MAT_S), [], [3]), box(MAT_X, [1, 2], [3]), box(MAT_WH, [], [3]),
         box(MAT_X, [1, 2], [3]), box(dagger(MAT_WH), [], [3]), box(MAT_S, [], [3]),
         box(MAT_X, [1, 2], [3])])),
    Identity("C(wH) from CS and wH", 2, _single(
        [box(MAT_WH, [1], [2])],
        [box(MAT_S, [1], [2]), box(MAT_WH, [], [2]), box(MAT_S, [1], [2]),
         box(dagger(MAT_WH), [], [2]), box(MAT_S, [1], [2])])),
    Identity("CZ from F^2, CX, F^6", 2, _single(
        [box(MAT_Z, [1], [2])],
        [box(matpow(F, 2), [], [2]), box(MAT_X, [1], [2]), box(matpow(F, 6), [], [2])])),
    Identity("CF from X, CX, Z, CZ and F", 2, _single(
        [box(F, [1], [2])],
        [box(MAT_X, [1], [2]), box(MAT_Z, [1], [2]), box(MAT_X, [], [2]), box(MAT_Z, [], [2]),
         box(MAT_X, [], [2]), box(F, [], [2]), box(MAT_X, [1], [2]), box(MAT_Z, [], [2]),
         box(MAT_X, [], [2]), box(F, [], [2]), box(MAT_X, [], [2])])),
    Identity("C^k W with one clean ancilla", 3, _collect, clean=lambda n: (n,)),
    Identity("C^k X with one borrowed wire", 5, _mcx_dirty),
    Identity("C^k Z = F^2 (C^k X) F^6", 2, _mcz_f),
    Identity("C^k Z = wH (C^k X) (wH)^dag", 3, _mcz_wh),
    Identity("C^k(ZXF) = X ZXF (C^k X) ZXF X", 2, _zxf),
    Identity("C^k(ZX) from C^(k-1)X and controlled F^2, F^6", 2, _qzone,
             note="the printed label reads XZ; the circuit computes ZX = (XZ)^dag"),
    Identity("C^k(ZF) from C^pX, C^q(ZXF), C^(k-1)Z", 3, _zf),
    Identity("C^k(FZ) from F^2, C^q(ZXF), C^pX, C^k(XZ), F^6", 3, _fz),
    Identity("C^k S with two borrowed wires", 4, _two_dirty_s),
    Identity("C(iX) = S on the control, then CX", 2, _single(
        [box(IX, [1], [2])], [box(MAT_S, [], [1]), box(MAT_X, [1], [2])])),
    Identity("C^k(iX) from CS and C^(k-1)(iX)", 3, _ix),
    Identity("C^k(iZ) = wH C^k(iX) (wH)^dag", 2, _iz),
    Identity("C(wSH) from CS, wH and CZ", 2, _single(
        [box(WSH, [1], [2])],
        [box(MAT_S, [1], [2]), box(MAT_WH, [], [2]), box(MAT_S, [1], [2]),
         box(dagger(MAT_WH), [], [2]), box(MAT_Z, [1], [2])])),
    Identity("C(wHS) from CZ, wH and CS", 2, _single(
        [box(WHS, [1], [2])],
        [box(MAT_Z, [1], [2]), box(MAT_WH, [], [2]), box(MAT_S, [1], [2]),
         box(dagger(MAT_WH), [], [2]), box(MAT_S, [1], [2])])),
    Identity("C^k(wSH) from C^(k-1)(wSH), CS and C^k(iZ)", 3, _wsh),
    Identity("C^k(wHS) = wH C^k(wSH)-circuit (wH)^dag", 3, _whs),
]


def run_identities(extra=1):
    """(name, n, ok) for every identity at its smallest n and up to n + extra."""
    out = []
    for ident in IDENTITIES:
        for n in range(ident.n_min, ident.n_min + extra + 1):
            out.append((ident.name, n, ident.check(n)))
    return out
