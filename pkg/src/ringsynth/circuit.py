"""Gate-level circuits: representation, exact evaluation and text format.

Wires are numbered from 1 and wire 1 is the most significant bit of the
basis-state index.  Ancilla wires follow the data wires.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import AncillaError, ParseError
from .linalg import MAT_H, MAT_HH, MAT_S, MAT_T, MAT_WH, MAT_X, MAT_Z, KERNELS, RingMatrix, dagger
from .rings import ONE, ZERO, RingScalar, format_scalar, lincomb2, omega_pow, parse_scalar

# name -> (number of controls, target kernel)
GATE_SPECS = {
    "X": (0, MAT_X),
    "CX": (1, MAT_X),
    "CCX": (2, MAT_X),
    "Z": (0, MAT_Z),
    "H": (0, MAT_H),
    "CH": (1, MAT_H),
    "HH": (0, MAT_HH),
    "S": (0, MAT_S),
    "Sdg": (0, dagger(MAT_S)),
    "T": (0, MAT_T),
    "Tdg": (0, dagger(MAT_T)),
    "F": (0, KERNELS["F2"]),
    "Fdg": (0, dagger(KERNELS["F2"])),
    "WH": (0, MAT_WH),
    "WHdg": (0, dagger(MAT_WH)),
}

INVERSE_NAME = {"S": "Sdg", "Sdg": "S", "T": "Tdg", "Tdg": "T", "F": "Fdg", "Fdg": "F",
                "WH": "WHdg", "WHdg": "WH"}

# dagger gates written as powers of the plain gate
DAGGER_POWERS = {"Sdg": ("S", 3), "Tdg": ("T", 7), "Fdg": ("F", 7), "WHdg": ("WH", 7)}


def gate_arity(name):
    nc, K = GATE_SPECS[name]
    return nc + (2 if K.nrows == 4 else 1)


@dataclass(frozen=True)
class Gate:
    name: str
    wires: tuple

    def __post_init__(self):
        if self.name not in GATE_SPECS:
            raise ValueError("unknown gate %r" % self.name)
        object.__setattr__(self, "wires", tuple(int(w) for w in self.wires))
        if len(self.wires) != gate_arity(self.name):
            raise ValueError("gate %s takes %d wires, got %d"
                             % (self.name, gate_arity(self.name), len(self.wires)))
        if len(set(self.wires)) != len(self.wires):
            raise ValueError("gate %s has repeated wires %r" % (self.name, self.wires))
        if min(self.wires) < 1:
            raise ValueError("wires are numbered from 1")

    def __str__(self):
        return " ".join([self.name] + [str(w) for w in self.wires])

    def inverse(self) -> Gate:
        return Gate(INVERSE_NAME.get(self.name, self.name), self.wires)

    @property
    def controls(self):
        return self.wires[:GATE_SPECS[self.name][0]]

    @property
    def targets(self):
        return self.wires[GATE_SPECS[self.name][0]:]


class Circuit:
    def __init__(self, n_data: int, n_ancilla: int = 0, ancilla_kind: str = "clean",
                 gates=(), phase: RingScalar = ONE):
        if n_data < 1:
            raise ValueError("a circuit needs at least one data wire")
        if ancilla_kind not in ("clean", "dirty"):
            raise ValueError("ancilla kind must be clean or dirty")
        self.n_data = n_data
        self.n_ancilla = n_ancilla
        self.ancilla_kind = ancilla_kind
        self.phase = phase
        self.gates = []
        self.extend(gates)

    @property
    def n_wires(self):
        return self.n_data + self.n_ancilla

    def append(self, g, *wires):
        if isinstance(g, str):
            g = Gate(g, wires)
        if max(g.wires) > self.n_wires:
            raise ValueError("gate %s uses wire beyond %d" % (g, self.n_wires))
        self.gates.append(g)
        return self

    def extend(self, gates):
        for g in gates:
            self.append(g)
        return self

    def __len__(self):
        return len(self.gates)

    def __eq__(self, other):
        return (isinstance(other, Circuit) and self.n_data == other.n_data
                and self.n_ancilla == other.n_ancilla and self.phase == other.phase
                and (self.n_ancilla == 0 or self.ancilla_kind == other.ancilla_kind)
                and self.gates == other.gates)

    def __repr__(self):
        return "Circuit(n_data=%d, n_ancilla=%d %s, gates=%d)" % (
            self.n_data, self.n_ancilla, self.ancilla_kind, len(self.gates))

    def inverse(self) -> Circuit:
        return Circuit(self.n_data, self.n_ancilla, self.ancilla_kind,
                       [g.inverse() for g in reversed(self.gates)], self.phase.conj())

    def counts(self):
        out = {}
        for g in self.gates:
            out[g.name] = out.get(g.name, 0) + 1
        return out

    def names(self):
        return {g.name for g in self.gates}


def expand_daggers(c: Circuit) -> Circuit:
    """Rewrite Sdg, Tdg, Fdg and WHdg as powers of S, T, F and WH."""
    out = Circuit(c.n_data, c.n_ancilla, c.ancilla_kind, phase=c.phase)
    for g in c.gates:
        if g.name in DAGGER_POWERS:
            name, p = DAGGER_POWERS[g.name]
            out.gates.extend([Gate(name, g.wires)] * p)
        else:
            out.gates.append(g)
    return out


# ---------------------------------------------------------------------------
# evaluation by row operations

@lru_cache(maxsize=None)
def _groups(name, wires, n_wires):
    """Index tuples of the basis states each kernel application mixes."""
    nc = GATE_SPECS[name][0]
    ctrl, tgt = wires[:nc], wires[nc:]
    cmask = 0
    for w in ctrl:
        cmask |= 1 << (n_wires - w)
    tbits = [1 << (n_wires - w) for w in tgt]
    tmask = sum(tbits)
    out = []
    for base in range(1 << n_wires):
        if base & tmask or (base & cmask) != cmask:
            continue
        if len(tbits) == 1:
            out.append((base, base | tbits[0]))
        else:
            b0, b1 = tbits
            out.append((base, base | b1, base | b0, base | b0 | b1))
    return tuple(out)


_PERM = {"X", "CX", "CCX"}


def _apply_kernel(rows, K, groups):
    """rows[idx] <- K rows[idx] for every index group."""
    m = K.nrows
    K = K.rows
    diag = all(not K[r][c] for r in range(m) for c in range(m) if r != c)
    for idx in groups:
        sub = [rows[i] for i in idx]
        if diag:
            for r in range(m):
                coef = K[r][r]
                if coef == -ONE:
                    rows[idx[r]] = [-x for x in sub[r]]
                elif coef != ONE:
                    rows[idx[r]] = [coef * x if x else ZERO for x in sub[r]]
            continue
        if m == 2:
            x0, x1 = sub
            (k00, k01), (k10, k11) = K
            nz = [j for j, (a, b) in enumerate(zip(x0, x1)) if a or b]
            y0, y1 = [ZERO] * len(x0), [ZERO] * len(x0)
            for j in nz:
                a, b = x0[j], x1[j]
                y0[j] = lincomb2(k00, a, k01, b)
                y1[j] = lincomb2(k10, a, k11, b)
            rows[idx[0]], rows[idx[1]] = y0, y1
            continue
        for r in range(m):
            acc = None
            for c in range(m):
                coef = K[r][c]
                if not coef:
                    continue
                src = sub[c]
                if acc is None:
                    acc = [coef * x if x else ZERO for x in src]
                else:
                    for j, x in enumerate(src):
                        if x:
                            acc[j] = acc[j] + coef * x
            rows[idx[r]] = acc


def apply_gate_rows(rows, g: Gate, n_wires: int):
    """Left-multiply rows (2^n_wires of them) by the gate's full matrix."""
    groups = _groups(g.name, g.wires, n_wires)
    if g.name in _PERM:
        for i0, i1 in groups:
            rows[i0], rows[i1] = rows[i1], rows[i0]
        return
    _apply_kernel(rows, GATE_SPECS[g.name][1], groups)


def run(c: Circuit, columns=None):
    """Rows of (phase * circuit matrix) restricted to the given basis columns.

    Uncontrolled one-wire gates are multiplied into a pending 2x2 kernel per
    wire, which is flushed only when another gate touches that wire; long
    runs such as F^4 then cost a single pass over the rows.
    """
    N = c.n_wires
    dim = 1 << N
    cols = list(range(dim)) if columns is None else list(columns)
    pos = {col: j for j, col in enumerate(cols)}
    rows = []
    for r in range(dim):
        row = [ZERO] * len(cols)
        if r in pos:
            row[pos[r]] = ONE
        rows.append(row)
    pending = {}

    def flush(w):
        K = pending.pop(w)
        _apply_kernel(rows, K, _groups("H", (w,), N))

    for g in c.gates:
        nc, K = GATE_SPECS[g.name]
        if nc == 0 and K.nrows == 2 and g.name not in _PERM:
            w = g.wires[0]
            pending[w] = K @ pending[w] if w in pending else K
            continue
        for w in g.wires:
            if w in pending:
                flush(w)
        apply_gate_rows(rows, g, N)
    for w in list(pending):
        flush(w)
    if c.phase != ONE:
        rows = [[c.phase * x if x else ZERO for x in r] for r in rows]
    return rows


def full_matrix(c: Circuit) -> RingMatrix:
    """Matrix of the circuit on all wires, including the phase."""
    return RingMatrix._wrap(run(c))


def gate_matrix(g: Gate, total_wires: int) -> RingMatrix:
    if max(g.wires) > total_wires:
        raise ValueError("gate %s does not fit on %d wires" % (g, total_wires))
    return full_matrix(Circuit(total_wires, gates=[g]))


@dataclass
class Evaluation:
    matrix: RingMatrix
    ok: bool
    message: str = ""


def evaluate(c: Circuit, strict: bool = True) -> Evaluation:
    """Matrix on the data wires together with the ancilla verdict.

    For clean ancillas only columns with the ancillas in |0> are computed,
    since the contract says nothing about the others.  With strict=True a
    contract violation raises AncillaError naming the offending column.
    """
    m = c.n_ancilla
    nd = 1 << c.n_data
    if m == 0:
        return Evaluation(full_matrix(c), True)
    A = 1 << m
    if c.ancilla_kind == "clean":
        rows = run(c, [psi * A for psi in range(nd)])
        W = [[ZERO] * nd for _ in range(nd)]
        msg = ""
        for r, row in enumerate(rows):
            a = r % A
            for psi, x in enumerate(row):
                if not x:
                    continue
                if a:
                    msg = msg or ("clean ancilla not restored: column |%s>|0> has weight on row %d"
                                  % (format(psi, "0%db" % c.n_data), r))
                else:
                    W[r // A][psi] = x
        ev = Evaluation(RingMatrix._wrap(W), not msg, msg)
    else:
        rows = run(c)
        W = [[rows[r * A][psi * A] for psi in range(nd)] for r in range(nd)]
        msg = ""
        for r in range(nd * A):
            for col in range(nd * A):
                want = W[r // A][col // A] if r % A == col % A else ZERO
                if rows[r][col] != want:
                    msg = "dirty ancilla disturbed at column %d, row %d" % (col, r)
                    break
            if msg:
                break
        ev = Evaluation(RingMatrix._wrap(W), not msg, msg)
    if strict and not ev.ok:
        raise AncillaError(ev.message)
    return ev


# ---------------------------------------------------------------------------
# text format

def serialize(c: Circuit) -> str:
    lines = ["qubits %d" % c.n_data]
    if c.n_ancilla:
        lines.append("ancillas %d %s" % (c.n_ancilla, c.ancilla_kind))
    if c.phase != ONE:
        lines.append("phase %s" % format_scalar(c.phase))
    lines.extend(str(g) for g in c.gates)
    return "\n".join(lines) + "\n"


def parse(text: str) -> Circuit:
    n_data = None
    n_anc, kind, phase = 0, "clean", ONE
    gates = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        head = toks[0]
        try:
            if head == "qubits":
                n_data = int(toks[1])
            elif head == "ancillas":
                n_anc = int(toks[1])
                kind = toks[2] if len(toks) > 2 else "clean"
                if kind not in ("clean", "dirty"):
                    raise ValueError("ancilla kind must be clean or dirty")
            elif head == "phase":
                phase = parse_scalar(" ".join(toks[1:]))
            elif head in GATE_SPECS:
                if n_data is None:
                    raise ValueError("gate before 'qubits' header")
                gates.append(Gate(head, [int(t) for t in toks[1:]]))
            else:
                raise ValueError("unknown gate %r" % head)
        except (ValueError, IndexError) as e:
            raise ParseError("line %d: %s" % (no, e)) from None
    if n_data is None:
        raise ParseError("missing 'qubits' header")
    try:
        c = Circuit(n_data, n_anc, kind, gates, phase)
    except ValueError as e:
        raise ParseError(str(e)) from None
    return c


def phase_is_omega_power(x: RingScalar) -> bool:
    return any(x == omega_pow(e) for e in range(8))
