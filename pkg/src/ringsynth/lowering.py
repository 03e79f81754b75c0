"""Lowering generator words to gate-level circuits.

Two modes are supported.  `one_clean` adds a single ancilla wire (the
highest-numbered wire) that starts and ends in |0>.  `none` uses no ancilla;
it handles the determinant-1 generators of the imaginary and Gaussian sets
and any other generator whose construction happens not to need a spare wire.

A multi-level generator W_[a,b] is realized as V^dag (C^k W) V where V is a
permutation (or signed permutation) circuit moving levels a, b to the
all-ones corner.  Internally gate lists are built as `Seq` objects carrying
an exact global phase w^ph, which lets us write F^6 as -F^2 and (wH)^7 as
i^3 wH.  The phase is folded back into gates of the target set at the end.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, Gate
from .errors import UnsupportedError
from .gatesets import GateSet, get_gateset
from .linalg import ORDERS, GeneratorWord, MultiLevelOp, RingMatrix, embed, matrix_tags
from .rings import ONE, omega_pow

ONE_CLEAN = "one_clean"
NONE = "none"
_MODES = {"one": ONE_CLEAN, "one_clean": ONE_CLEAN, "allow_one": ONE_CLEAN,
          "none": NONE, "ancilla_free": NONE}


class Seq:
    """A gate list together with a global phase w^ph."""

    __slots__ = ("gates", "ph")

    def __init__(self, gates=(), ph=0):
        self.gates = list(gates)
        self.ph = ph % 8

    def __add__(self, other):
        return Seq(self.gates + other.gates, self.ph + other.ph)

    def __iadd__(self, other):
        self.gates.extend(other.gates)
        self.ph = (self.ph + other.ph) % 8
        return self

    def __mul__(self, k):
        return Seq(self.gates * k, self.ph * k)

    def inverse(self):
        out = Seq(ph=-self.ph)
        for g in reversed(self.gates):
            out += _gate_inverse(g)
        return out


def _g(name, *wires):
    return Seq([Gate(name, wires)])


def _gate_inverse(g: Gate) -> Seq:
    if g.name == "S":
        return Seq([g] * 3)
    if g.name == "F":
        return Seq([g] * 3, 4)           # F^4 = -I
    if g.name == "WH":
        return Seq([g], 6)               # (wH)^2 = i, so (wH)^7 = i^3 wH
    if g.name == "T":
        return Seq([g] * 7)
    if g.name in ("Sdg", "Fdg", "WHdg", "Tdg"):
        return Seq([Gate(g.name[:-2], g.wires)])
    return Seq([g])


def fpow(t, e) -> Seq:
    e %= 8
    ph = 4 if e >= 4 else 0
    return Seq([Gate("F", (t,))] * (e % 4), ph)


def whpow(t, e) -> Seq:
    e %= 8
    return Seq([Gate("WH", (t,))] * (e % 2), 2 * (e // 2))


def spow(t, e) -> Seq:
    return Seq([Gate("S", (t,))] * (e % 4))


# ---------------------------------------------------------------------------
# multi-controlled X with one dirty wire

def mcx_dirty(controls, target, dirty=None) -> list:
    """Gates acting as C^k X(controls -> target) for every state of `dirty`."""
    return _mcx(tuple(controls), target, dirty).gates


def _mcx(ctrls, t, dirty) -> Seq:
    k = len(ctrls)
    if t in ctrls or (dirty is not None and (dirty in ctrls or dirty == t)):
        raise ValueError("wire collision in multi-controlled X")
    if k == 0:
        return _g("X", t)
    if k == 1:
        return _g("CX", ctrls[0], t)
    if k == 2:
        return _g("CCX", ctrls[0], ctrls[1], t)
    if dirty is None:
        raise UnsupportedError("C^%dX needs a spare wire" % k)
    k1 = (k + 1) // 2
    c1, c2 = ctrls[:k1], ctrls[k1:]
    a = _mcx(c1, dirty, c2[0] if c2 else t)
    b = _mcx(c2 + (dirty,), t, c1[0])
    return a + b + a + b


# ---------------------------------------------------------------------------
# per gate set templates: (control or None, targets, dirty) -> Seq

def _need(d, what):
    if d is None:
        raise UnsupportedError("%s needs a spare wire" % what)
    return d


def _hh_pair(x, y, split):
    return _g("H", x) + _g("H", y) if split else _g("HH", x, y)


def _int_templates(split):
    def z(c, ts, d):
        t = ts[0]
        d = _need(d, "Z over the integral set")
        mid = _g("X", t) if c is None else _g("CX", c, t)
        return _hh_pair(t, d, split) + mid + _hh_pair(t, d, split)

    def hh(c, ts, d):
        t1, t2 = ts
        if c is None:
            return _hh_pair(t1, t2, split)
        d = _need(d, "controlled HH")
        cx = _g("CX", t2, t1)
        ccx = _g("CCX", c, t1, t2)
        half = _hh_pair(t2, d, split) + cx + ccx + cx
        return half + half

    return {"Z": z, "HH": hh}


def _real_templates():
    def z(c, ts, d):
        t = ts[0]
        return _g("H", t) + (_g("X", t) if c is None else _g("CX", c, t)) + _g("H", t)

    def h(c, ts, d):
        return _g("H", ts[0]) if c is None else _g("CH", c, ts[0])

    def hh(c, ts, d):
        return h(c, ts[:1], d) + h(c, ts[1:], d)

    return {"Z": z, "H": h, "HH": hh}


def imag_z(t) -> Seq:
    return fpow(t, 2) + _g("X", t) + fpow(t, 6)


def imag_cz(c, t) -> Seq:
    return fpow(t, 2) + _g("CX", c, t) + fpow(t, 6)


def imag_cf(c, t) -> Seq:
    """Controlled F from X, CX, Z and F only."""
    return (_g("CX", c, t) + imag_cz(c, t) + _g("X", t) + imag_z(t) + _g("X", t) + _g("F", t)
            + _g("CX", c, t) + imag_z(t) + _g("X", t) + _g("F", t) + _g("X", t))


def _imag_templates():
    def z(c, ts, d):
        return imag_z(ts[0]) if c is None else imag_cz(c, ts[0])

    def f(c, ts, d):
        return _g("F", ts[0]) if c is None else imag_cf(c, ts[0])

    return {"Z": z, "F": f}


def gauss_cs(c, t, d, wh=None) -> Seq:
    """Controlled S with one dirty wire d."""
    wh = wh or (lambda w: whpow(w, 1))
    ccx = _g("CCX", c, t, d)
    return (_g("S", d) + ccx + wh(d) + ccx + wh(d).inverse() + spow(d, 3) + ccx)


def _gauss_templates(wh):
    def s(c, ts, d):
        t = ts[0]
        if c is None:
            return _g("S", t)
        return gauss_cs(c, t, _need(d, "controlled S"), wh)

    def z(c, ts, d):
        return s(c, ts, d) * 2

    def w(c, ts, d):
        t = ts[0]
        if c is None:
            return wh(t)
        cs = s(c, ts, d)
        return cs + wh(t) + cs + wh(t).inverse() + cs

    return {"S": s, "Z": z, "WH": w}


def _supgauss_wh(t):
    # wH = S H S H S, from w = SHSHSH
    return _g("S", t) + _g("H", t) + _g("S", t) + _g("H", t) + _g("S", t)


_TEMPLATES = {
    "INT": _int_templates(False),
    "SUPINT": _int_templates(True),
    "REAL": _real_templates(),
    "IMAG": _imag_templates(),
    "GAUSS": _gauss_templates(lambda t: whpow(t, 1)),
    "SUPGAUSS": _gauss_templates(_supgauss_wh),
}

_KERNEL_TEMPLATE = {"NEG1": "Z", "I4": "S", "H2": "H", "F2": "F", "WH2": "WH", "HH4": "HH"}


def control_extend(template, controls, targets, clean=None, spare=()) -> Seq:
    """C^k W from a template for W and CW that may borrow one dirty wire.

    With two or more controls the controls are first collected onto the
    clean ancilla, which then drives the singly-controlled template.
    """
    controls = tuple(controls)
    targets = tuple(targets)
    free = [w for w in spare if w not in controls and w not in targets and w != clean]
    k = len(controls)
    if k == 0:
        return template(None, targets, free[0] if free else clean)
    if k == 1:
        return template(controls[0], targets, clean if clean is not None else (free[0] if free else None))
    if clean is None:
        raise UnsupportedError("C^%d W needs a clean ancilla" % k)
    collect = _mcx(controls, clean, targets[0])
    return collect + template(clean, targets, controls[0]) + collect


# ---------------------------------------------------------------------------
# permutations

def _bits(x, n):
    return [(x >> (n - 1 - i)) & 1 for i in range(n)]


def _fully_controlled(n, state, wire, body) -> Seq:
    """Conjugate body (controlled on all wires except `wire` being 1) so that it
    fires on the basis state `state` instead."""
    b = _bits(state, n)
    flips = Seq()
    for w in range(1, n + 1):
        if w != wire and not b[w - 1]:
            flips += _g("X", w)
    return flips + body + flips


def _gray_path(g, h, n):
    path = [g]
    cur = g
    for i in range(n):
        bit = 1 << (n - 1 - i)
        if (cur ^ h) & bit:
            cur ^= bit
            path.append(cur)
    return path


def _adjacent_swap(s, s2, n, dirty) -> Seq:
    diff = s ^ s2
    wire = n - diff.bit_length() + 1
    ctrls = tuple(w for w in range(1, n + 1) if w != wire)
    return _fully_controlled(n, s, wire, _mcx(ctrls, wire, dirty))


def transposition(g, h, n, dirty=None) -> Seq:
    """Swap basis states g and h (0-based indices) of n wires."""
    if g == h:
        return Seq()
    path = _gray_path(g, h, n)
    steps = [_adjacent_swap(path[i], path[i + 1], n, dirty) for i in range(len(path) - 1)]
    out = Seq()
    for s in steps[:-1]:
        out += s
    out += steps[-1]
    for s in reversed(steps[:-1]):
        out += s
    return out


def _placement(levels, n):
    """Transpositions moving the given 0-based levels onto the top corner, in order."""
    N = 1 << n
    targets = list(range(N - len(levels), N))
    pos = {x: x for x in range(N)}        # element -> position
    at = {x: x for x in range(N)}         # position -> element
    swaps = []
    for lv, tg in zip(levels, targets):
        p = pos[lv]
        if p != tg:
            swaps.append((p, tg))
            e2 = at[tg]
            at[p], at[tg] = e2, lv
            pos[e2], pos[lv] = p, tg
    return swaps


def lower_permutation(P: RingMatrix) -> Circuit:
    """Circuit over {X, CX, CCX} for a permutation matrix, one dirty ancilla for n >= 4."""
    N = P.nrows
    n = N.bit_length() - 1
    if N != 1 << n or n < 1:
        raise ValueError("dimension %d is not a power of two" % N)
    perm = []
    for j in range(N):
        col = P.column(j)
        nz = [i for i, x in enumerate(col) if x]
        if len(nz) != 1 or col[nz[0]] != ONE:
            raise ValueError("not a permutation matrix")
        perm.append(nz[0])
    if sorted(perm) != list(range(N)):
        raise ValueError("not a permutation matrix")
    # reduce to the identity by row swaps applied on the left
    rows = list(perm)                     # rows[j] = image of j
    where = {img: j for j, img in enumerate(rows)}
    swaps = []
    for j in range(N):
        r = rows[j]
        if r != j:
            # swap rows j and r: the element mapped to j now maps to r
            k = where[j]
            swaps.append((j, r))
            rows[j], rows[k] = j, r
            where[j], where[r] = j, k
    dirty = n + 1 if n >= 4 else None
    c = Circuit(n, 1 if dirty else 0, "dirty")
    seq = Seq()
    for a, b in reversed(swaps):
        seq += transposition(a, b, n, dirty)
    c.extend(seq.gates)
    return c


# ---------------------------------------------------------------------------
# ancilla-free fully controlled constructions

def _spare(n, *busy):
    used = set()
    for b in busy:
        used.update(b if isinstance(b, (tuple, list)) else (b,))
    return [w for w in range(1, n + 1) if w not in used]


def af_zx(ctrls, t) -> Seq:
    """C^m(ZX) without ancillas."""
    ctrls = tuple(ctrls)
    if not ctrls:
        return _g("X", t) + imag_z(t)
    head, last = ctrls[:-1], ctrls[-1]
    x = _mcx(head, t, last)
    return x + _cf2(last, t) + x + _cf6(last, t)


def af_xz(ctrls, t) -> Seq:
    """C^m(XZ); same shape as C^m(ZX) with the two halves swapped."""
    ctrls = tuple(ctrls)
    if not ctrls:
        return imag_z(t) + _g("X", t)
    head, last = ctrls[:-1], ctrls[-1]
    x = _mcx(head, t, last)
    return _cf2(last, t) + x + _cf6(last, t) + x


def _cf2(c, t):
    return imag_cf(c, t) * 2


def _cf6(c, t):
    # C(F^6) = C(-F^2): the sign lands on the control as Z
    return _cf2(c, t) + imag_z(c)


def af_zxf(ctrls, t, dirty) -> Seq:
    """C^k(ZXF) = X, ZXF, C^kX, ZXF, X."""
    zxf = _g("F", t) + _g("X", t) + imag_z(t)
    return _g("X", t) + zxf + _mcx(tuple(ctrls), t, dirty) + zxf + _g("X", t)


def _split(ctrls):
    p = len(ctrls) // 2
    return ctrls[:p], ctrls[p:]


def _af_cz_multi(ctrls, t, dirty) -> Seq:
    return fpow(t, 2) + _mcx(tuple(ctrls), t, dirty) + fpow(t, 6)


def af_zf(ctrls, t) -> Seq:
    ctrls = tuple(ctrls)
    m = len(ctrls)
    if m == 0:
        return _g("F", t) + imag_z(t)
    if m == 1:
        return imag_cf(ctrls[0], t) + imag_cz(ctrls[0], t)
    g1, g2 = _split(ctrls)
    x = _mcx(g1, t, g2[0])
    y = af_zxf(g2, t, g1[0])
    return x + y + x + y + _af_cz_multi(ctrls[:-1], ctrls[-1], t)


def af_fz(ctrls, t) -> Seq:
    ctrls = tuple(ctrls)
    m = len(ctrls)
    if m == 0:
        return imag_z(t) + _g("F", t)
    if m == 1:
        return imag_cz(ctrls[0], t) + imag_cf(ctrls[0], t)
    g1, g2 = _split(ctrls)
    x = _mcx(g1, t, g2[0])
    y = af_zxf(g2, t, g1[0])
    return fpow(t, 2) + y + x + y + x + af_xz(ctrls, t) + fpow(t, 6)


def af_ix(ctrls, t) -> Seq:
    """C^m(iX) over {X, CX, CCX, wH, S} without ancillas."""
    ctrls = tuple(ctrls)
    m = len(ctrls)
    if m == 0:
        return whpow(t, 1) + spow(t, 2) + whpow(t, 1)
    if m == 1:
        return _g("S", ctrls[0]) + _g("CX", ctrls[0], t)
    c1, rest = ctrls[0], ctrls[1:]
    cs = gauss_cs(c1, t, rest[0])
    inner = af_ix(rest, t)
    return whpow(t, 1) + cs.inverse() + inner + cs + inner.inverse() + whpow(t, 1).inverse()


def af_iz(ctrls, t) -> Seq:
    return whpow(t, 1) + af_ix(ctrls, t) + whpow(t, 1).inverse()


def af_wsh(ctrls, t, spare=()) -> Seq:
    ctrls = tuple(ctrls)
    m = len(ctrls)
    if m == 0:
        return whpow(t, 1) + _g("S", t)
    if m == 1:
        free = [w for w in spare if w not in ctrls and w != t]
        if not free:
            raise UnsupportedError("controlled wSH needs a third wire")
        c, d = ctrls[0], free[0]
        cs = gauss_cs(c, t, d)
        return cs + whpow(t, 1) + cs + whpow(t, 1).inverse() + cs * 2
    g1, last = ctrls[:-1], ctrls[-1]
    inner = af_wsh(g1, t, spare=(last,))
    cs = gauss_cs(last, t, g1[0])
    return inner.inverse() + cs.inverse() + inner + cs + af_iz(ctrls, t)


def af_whs(ctrls, t, spare=()) -> Seq:
    ctrls = tuple(ctrls)
    if not ctrls:
        return _g("S", t) + whpow(t, 1)
    return whpow(t, 1) + af_wsh(ctrls, t, spare) + whpow(t, 1).inverse()


def _af_kernel(kind, ctrls, t, n) -> Seq:
    spare = _spare(n, ctrls, t)
    if kind == "ZX2":
        return af_zx(ctrls, t)
    if kind == "XZ2":
        return af_xz(ctrls, t)
    if kind == "ZF2":
        return af_zf(ctrls, t)
    if kind == "FZ2":
        return af_fz(ctrls, t)
    if kind == "IX2":
        return af_ix(ctrls, t)
    if kind == "IZ2":
        return af_iz(ctrls, t)
    if kind == "WSH2":
        return af_wsh(ctrls, t, spare + [w for w in range(1, n + 1) if w not in ctrls and w != t])
    if kind == "WHS2":
        return af_whs(ctrls, t, spare + [w for w in range(1, n + 1) if w not in ctrls and w != t])
    raise UnsupportedError("no ancilla-free construction for %s" % kind)


_AF_KINDS = {"IMAG": {"XZ2", "ZX2", "FZ2", "ZF2", "Z2"}, "GAUSS": {"IZ2", "IX2", "WSH2", "WHS2"}}


def _af_conjugation(a0, b0, n, gs_tag) -> Seq:
    """Signed permutation circuit V with V e_a0 = e_p and V e_b0 = e_p', up to one common phase,
    where p = 11..10 and p' = 11..11."""
    N = 1 << n
    p, p2 = N - 2, N - 1
    mask = a0 ^ p
    out = Seq()
    for w in range(1, n + 1):
        if mask >> (n - w) & 1:
            out += _g("X", w)
    s = b0 ^ mask
    phase = 0                           # power of i carried by the moving state
    order = []
    if not s & 1:
        order.append(n)
    order += [w for w in range(1, n + 1) if w != n or s & 1]
    for w in order:
        bit = 1 << (n - w)
        if s & bit:
            continue
        s2 = s | bit
        ctrls = tuple(x for x in range(1, n + 1) if x != w)
        if gs_tag == "IMAG":
            # XZ on (lo, hi) sends e_lo to +e_hi
            body = af_xz(ctrls, w)
        else:
            body = af_ix(ctrls, w)
            phase += 1
        out += _fully_controlled(n, s, w, body)
        s = s2
    if s != p2:
        raise AssertionError("conjugation did not reach the corner")
    if phase % 4:
        out += spow(n, -phase)
    return out


def lower_generator_ancillafree(g: MultiLevelOp, gs, n: int) -> Seq:
    """Ancilla-free gate sequence for a determinant-1 generator on n wires."""
    gs = get_gateset(gs)
    if g.kind not in _AF_KINDS.get(gs.tag, ()):
        raise UnsupportedError("%s has no ancilla-free construction over %s" % (g.kind, gs.tag))
    if g.kind == "Z2":
        a, b, c, d = g.levels
        return lower_generator_ancillafree(MultiLevelOp("XZ2", (b, d), 2), gs, n)
    if n < 1:
        raise ValueError("need at least one wire")
    e = g.exponent % ORDERS[g.kind]
    if e == 0:
        return Seq()
    a0, b0 = g.levels[0] - 1, g.levels[1] - 1
    V = _af_conjugation(a0, b0, n, gs.tag)
    ctrls = tuple(range(1, n))
    body = _af_kernel(g.kind, ctrls, n, n)
    order = ORDERS[g.kind]
    core = body * e if e <= order - e else body.inverse() * (order - e)
    return V + core + V.inverse()


def _ring_check(g: MultiLevelOp, gs: GateSet, n):
    dim = 1 << n
    if gs.ring not in matrix_tags(embed(g, dim)):
        raise UnsupportedError("generator %s is not over the ring %s of %s"
                               % (g.kind, gs.ring, gs.tag))


def lower_generator_seq(g: MultiLevelOp, gs, n: int, mode=ONE_CLEAN) -> Seq:
    gs = get_gateset(gs)
    mode = _MODES.get(mode, mode)
    anc = n + 1 if mode == ONE_CLEAN else None
    e = g.exponent % ORDERS[g.kind]
    if e == 0:
        return Seq()
    if g.kind in _AF_KINDS.get(gs.tag, ()):
        return lower_generator_ancillafree(g, gs, n)
    _ring_check(g, gs, n)
    if g.kind == "X2":
        return transposition(g.levels[0] - 1, g.levels[1] - 1, n, anc)
    if g.kind == "GLOBAL_IH":
        if "H" not in gs.gates:
            raise UnsupportedError("GLOBAL_IH needs H")
        return _g("H", n)
    if g.kind == "GLOBAL_OMEGA":
        if {"H", "S"} <= gs.gates:
            one = _g("H", 1) + _g("S", 1) + _g("H", 1) + _g("S", 1) + _g("H", 1) + _g("S", 1)
            return one * e
        return Seq(ph=e)
    tname = _KERNEL_TEMPLATE.get(g.kind)
    template = _TEMPLATES[gs.tag].get(tname)
    if template is None:
        raise UnsupportedError("no %s template over %s" % (g.kind, gs.tag))
    order = ORDERS[g.kind]
    inv = e > order - e
    reps = order - e if inv else e
    arity = len(g.levels)
    if arity == 4 and n < 2:
        raise ValueError("four-level generator needs two qubits")
    swaps = _placement([a - 1 for a in g.levels], n)
    V = Seq()
    for x, y in swaps:
        V += transposition(x, y, n, anc)
    tbits = {1: 1, 2: 1, 4: 2}[arity]
    targets = tuple(range(n - tbits + 1, n + 1))
    controls = tuple(range(1, n - tbits + 1))
    one = control_extend(template, controls, targets, anc, spare=range(1, n + 1))
    body = (one.inverse() if inv else one) * reps
    return V + body + V.inverse()


def lower_generator(g: MultiLevelOp, gs, mode=ONE_CLEAN, n: int | None = None) -> Circuit:
    n = n or _qubits(g.dim)
    return _finish(lower_generator_seq(g, gs, n, mode), n, gs, mode)


def _qubits(dim):
    if dim is None or dim < 2 or dim & (dim - 1):
        raise ValueError("dimension %r is not a power of two" % (dim,))
    return dim.bit_length() - 1


def _absorb_phase(seq: Seq, gs: GateSet):
    ph = seq.ph % 8
    if ph == 0:
        return seq
    if "F" in gs.gates and ph == 4:
        return Seq(seq.gates + [Gate("F", (1,))] * 4)
    if "WH" in gs.gates and ph % 2 == 0:
        return Seq(seq.gates + [Gate("WH", (1,))] * ph)
    if {"H", "S"} <= gs.gates:
        w = [Gate("H", (1,)), Gate("S", (1,))] * 3
        return Seq(seq.gates + w * ph)
    return seq


def _finish(seq: Seq, n, gs, mode) -> Circuit:
    gs = get_gateset(gs)
    mode = _MODES.get(mode, mode)
    seq = _absorb_phase(seq, gs)
    m = 1 if mode == ONE_CLEAN else 0
    used_anc = any(n + 1 in g.wires for g in seq.gates)
    if mode == ONE_CLEAN and not used_anc:
        m = 0
    c = Circuit(n, m, "clean", phase=omega_pow(seq.ph))
    c.extend(seq.gates)
    return c


@dataclass
class LoweringPlan:
    n_qubits: int
    ancilla_mode: str
    gateset: GateSet


def lower_word(word: GeneratorWord, gs, mode=ONE_CLEAN, keep_ancilla: bool = True) -> Circuit:
    """Circuit whose matrix is word.matrix() = G_1 ... G_l (so G_l comes first)."""
    gs = get_gateset(gs)
    mode = _MODES.get(mode, mode)
    if mode not in (ONE_CLEAN, NONE):
        raise ValueError("unknown ancilla mode %r" % mode)
    n = _qubits(word.dim)
    seq = Seq()
    for op in reversed(word.ops):
        seq += lower_generator_seq(op, gs, n, mode)
    c = _finish(seq, n, gs, mode)
    if keep_ancilla and mode == ONE_CLEAN and c.n_ancilla == 0:
        c = Circuit(n, 1, "clean", c.gates, c.phase)
    return c


def invert_circuit(c: Circuit, gs=None) -> Circuit:
    """Inverse circuit written with the gates of `gs` (daggers become powers)."""
    seq = Seq(c.gates).inverse()
    seq.ph = (seq.ph - _phase_exponent(c.phase)) % 8
    if gs is not None:
        seq = _absorb_phase(seq, get_gateset(gs))
    out = Circuit(c.n_data, c.n_ancilla, c.ancilla_kind, phase=omega_pow(seq.ph))
    out.extend(seq.gates)
    return out


def _phase_exponent(x):
    for e in range(8):
        if omega_pow(e) == x:
            return e
    raise ValueError("circuit phase is not a power of w")


def compile_unitary(V: RingMatrix, gateset="auto", ancilla="one"):
    """Synthesize V and lower the inverse word; returns (SynthResult, Circuit)."""
    from .synth import SynthRequest, synthesize
    policy = "ancilla_free" if _MODES.get(ancilla, ancilla) == NONE else "allow_one"
    res = synthesize(SynthRequest(V, gateset, policy))
    mode = NONE if policy == "ancilla_free" else ONE_CLEAN
    circ = lower_word(res.word.inverse(), res.gateset, mode)
    return res, circ
