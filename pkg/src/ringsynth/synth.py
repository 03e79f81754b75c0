"""Exact synthesis: reduce a unitary to the identity with multi-level generators.

Each algorithm fixes the columns of V from left to right.  A column is
driven to a basis vector by passes that strictly lower its denominator
exponent; once the exponent is 0 the column is a unit multiple of some
e_j' and a permutation (plus a phase) finishes it.  Generators only ever
touch levels j and above when column j is being processed.

Words are returned in product order: the result satisfies word.matrix() @ V == I,
so the last generator in the word is the first one applied to V.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import DeterminantError, DomainError, NotUnitaryError, UnsupportedError
from .gatesets import FOR_TAG, GAUSS, IMAG, INT, REAL, SUPGAUSS, SUPINT, GateSet, get_gateset
from .linalg import (
    KERNELS, GeneratorWord, MultiLevelOp, RingMatrix, apply_op_rows, classify_matrix,
    det_exact, is_unitary, lde, matrix_tags, minimal_tag, _unitary_diagnostic,
)
from .rings import (
    I, ISQRT2, ONE, ZERO, RingScalar, RingTag, as_scalar, i_pow, omega_pow, residue, scalar_tags,
)


@dataclass
class PassRecord:
    column: int          # 1-based
    before: int
    after: int


@dataclass
class SynthResult:
    word: GeneratorWord
    gateset: GateSet
    residual_phase: RingScalar = ONE
    certificate: bool = False
    trace: list = field(default_factory=list)
    ancilla_free: bool = False

    def lde_sequences(self):
        """Per column, the lde values seen: before the first pass, then after each pass."""
        seqs = {}
        for p in self.trace:
            s = seqs.setdefault(p.column, [p.before])
            s.append(p.after)
        return seqs


@dataclass
class SynthRequest:
    matrix: RingMatrix
    gateset: object = "auto"
    ancilla_policy: str = "allow_one"


class InvariantError(AssertionError):
    """A lemma-level invariant failed; indicates a bug or an invalid input."""


# ---------------------------------------------------------------------------
# small lemma-level reductions, exposed for testing

_HH_SIGNS = [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]


def reduce_quadruple_integral(u1, u2, u3, u4):
    """Sign exponents m with (-1)^m u = 1 mod 4, and the integers (H x H)(-1)^m u."""
    us = [int(u) for u in (u1, u2, u3, u4)]
    if any(u % 2 == 0 for u in us):
        raise DomainError("entries must be odd: %r" % (us,))
    m = [0 if u % 4 == 1 else 1 for u in us]
    s = [u if e == 0 else -u for u, e in zip(us, m)]
    out = []
    for row in _HH_SIGNS:
        t = sum(a * b for a, b in zip(row, s))
        out.append(t // 2)
    return tuple(m), tuple(out)


def _pair_apply(kind_or_matrix, u1, u2):
    K = KERNELS[kind_or_matrix] if isinstance(kind_or_matrix, str) else kind_or_matrix
    a, b = as_scalar(u1), as_scalar(u2)
    return (K.rows[0][0] * a + K.rows[0][1] * b, K.rows[1][0] * a + K.rows[1][1] * b)


def _divisible(y: RingScalar, base: str) -> bool:
    """y is divisible by base inside the matching integer ring."""
    if base == "sqrt2":
        return RingTag.Zsqrt2 in scalar_tags(y.mul_sqrt2_pow(-1))
    if base == "isqrt2":
        return RingTag.Zisqrt2 in scalar_tags(y * ISQRT2.conj() * RingScalar(1, 2))
    if base == "1+i":
        return RingTag.Zi in scalar_tags(y.mul_sqrt2_pow(-1) * omega_pow(-1))
    raise ValueError(base)


def reduce_pair_real(u1, u2):
    """H(u1, u2) for u1 = u2 mod 2 in Z[sqrt2]; both outputs divisible by sqrt2."""
    if residue(u1, "2", RingTag.Zsqrt2).rep != residue(u2, "2", RingTag.Zsqrt2).rep:
        raise DomainError("entries are not congruent mod 2")
    return _pair_apply("H2", u1, u2)


def _imag_prefix_matrix(m0, m1, m2, m3):
    from .linalg import MAT_X, matpow, RingMatrix as RM
    P = RM.identity(2)
    if m3:
        P = MAT_X @ P
    P = RM([[(-1) ** m1, 0], [0, (-1) ** m2]]) @ P
    return matpow(KERNELS["F2"], m0) @ P


_IMAG_PREFIXES = [(m0, m1, m2, m3) for m0 in range(4) for m1, m2, m3 in product((0, 1), repeat=3)]
_IMAG_PREFIX_MATS = {m: _imag_prefix_matrix(*m) for m in _IMAG_PREFIXES}


def reduce_pair_imaginary(u1, u2):
    """Lexicographically least prefix F^m0 (-1)_1^m1 (-1)_2^m2 X^m3 making both outputs
    divisible by i sqrt2, together with the outputs."""
    for u in (u1, u2):
        n = as_scalar(u) * as_scalar(u).conj()
        if RingTag.Zisqrt2 not in scalar_tags(u) or n.a % 2 != 1:
            raise DomainError("entry %s is not odd in Z[i sqrt2]" % as_scalar(u))
    for m in _IMAG_PREFIXES:
        y = _pair_apply(_IMAG_PREFIX_MATS[m], u1, u2)
        if all(_divisible(t, "isqrt2") for t in y):
            return m, y
    raise InvariantError("no prefix reduces (%s, %s)" % (u1, u2))


def _gauss_class(u):
    return residue(u, "2", RingTag.Zi).rep


def reduce_pair_gaussian(u1, u2, max_exponent=3):
    """Exponents m1, m2 with i^m u = 1 mod 2 and the outputs of wH applied to them.

    max_exponent=3 uses i^3 for entries congruent to i (the ancilla-capable
    algorithm); max_exponent=1 uses i^1, which the ancilla-free table needs.
    """
    ms = []
    for u in (u1, u2):
        r = _gauss_class(u)
        if r.c == (1, 0, 0, 0):
            ms.append(0)
        elif r.c == (0, 0, 1, 0):
            ms.append(max_exponent)
        else:
            raise DomainError("entry %s is not odd in Z[i]" % as_scalar(u))
    a = as_scalar(u1) * i_pow(ms[0])
    b = as_scalar(u2) * i_pow(ms[1])
    return tuple(ms), _pair_apply("WH2", a, b)


# Ancilla-free replacements, in application order.  Each replacement R
# satisfies R = D P for the prefix P it replaces and a unit monomial D, so
# divisibility of the outputs is preserved.
IMAG_ANCILLAFREE = {
    (2, 0, 0, 0): ("ZF2", "FZ2"),
    (1, 1, 0, 0): ("XZ2", "XZ2", "FZ2"),
    (1, 0, 1, 0): ("FZ2",),
    (1, 1, 1, 0): ("XZ2", "XZ2", "ZF2"),
    (1, 0, 0, 1): ("ZX2", "FZ2"),
    (1, 1, 0, 1): ("XZ2", "ZF2"),
    (1, 0, 1, 1): ("ZX2", "ZF2"),
    (1, 1, 1, 1): ("XZ2", "FZ2"),
    (1, 0, 0, 0): ("ZF2",),
}

GAUSS_ANCILLAFREE = {
    (0, 0): ("WSH2",),
    (1, 0): ("IZ2", "WHS2"),
    (0, 1): ("WHS2",),
    (1, 1): ("IZ2", "WSH2"),
}


# ---------------------------------------------------------------------------
# the column reduction engine

class _Reducer:
    def __init__(self, V: RingMatrix):
        self.rows = V.copy_rows()
        self.n = V.nrows
        self.applied = []
        self.trace = []

    def apply(self, kind, levels=(), exponent=1):
        op = MultiLevelOp(kind, [a + 1 for a in levels], exponent, self.n)
        if op.exponent == 0:
            return
        apply_op_rows(self.rows, op)
        self.applied.append(op)

    def column(self, j):
        return [r[j] for r in self.rows]

    def word(self):
        return GeneratorWord(self.n, list(reversed(self.applied)))

    def matrix(self):
        return RingMatrix._wrap(self.rows)

    def reduce_column(self, j, base, ring, step):
        """Run passes until column j has lde 0."""
        q = lde(self.column(j), base, ring)
        while q > 0:
            step(j, q)
            q2 = lde(self.column(j), base, ring)
            self.trace.append(PassRecord(j + 1, q, q2))
            if q2 >= q:
                raise InvariantError("lde did not drop in column %d: %d -> %d" % (j + 1, q, q2))
            q = q2

    def unit_position(self, j):
        """For an lde-0 unit column: (j', value) of its only nonzero entry."""
        col = self.column(j)
        nz = [(i, x) for i, x in enumerate(col) if x]
        if len(nz) != 1 or nz[0][0] < j or nz[0][1] * nz[0][1].conj() != ONE:
            raise InvariantError("column %d is not a unit basis vector after reduction" % (j + 1))
        return nz[0]


def _numerators(col, j, scale):
    return [(i, col[i] * scale) for i in range(j, len(col)) if col[i]]


def _check_count(idx, mult, what):
    if len(idx) % mult:
        raise InvariantError("%d entries %s, not a multiple of %d" % (len(idx), what, mult))


def _integral_step(R: _Reducer):
    def step(j, q):
        scale = RingScalar(2 ** q)
        odd = []
        for i, u in _numerators(R.column(j), j, scale):
            v = u.to_ringint().c[0]
            if v % 2:
                odd.append((i, v))
        _check_count(odd, 4, "odd")
        for t in range(0, len(odd), 4):
            quad = odd[t:t + 4]
            m, _ = reduce_quadruple_integral(*[v for _, v in quad])
            for (i, _), e in zip(quad, m):
                if e:
                    R.apply("NEG1", [i])
            R.apply("HH4", [i for i, _ in quad])
    return step


def _real_step(R: _Reducer):
    def step(j, q):
        scale = RingScalar(1).mul_sqrt2_pow(q)
        ones, others = [], []
        for i, u in _numerators(R.column(j), j, scale):
            r = residue(u, "2", RingTag.Zsqrt2).rep.c
            if r == (1, 0, 0, 0):
                ones.append(i)
            elif r == (1, 1, 0, -1):
                others.append(i)
        for group in (ones, others):
            _check_count(group, 2, "in one odd class mod 2")
            for t in range(0, len(group), 2):
                R.apply("H2", group[t:t + 2])
    return step


def _imag_odd(R, j, q):
    scale = i_pow(q) * RingScalar(1).mul_sqrt2_pow(q)
    odd = []
    for i, u in _numerators(R.column(j), j, scale):
        if (u * u.conj()).a % 2:
            odd.append((i, u))
    _check_count(odd, 2, "with odd norm")
    return odd


def _growth(R, j, a, b, M):
    """Largest sqrt2-exponent the 2x2 matrix M creates in rows a, b right of column j."""
    ra, rb = R.rows[a], R.rows[b]
    (m00, m01), (m10, m11) = M.rows
    worst = 0
    for c in range(j + 1, R.n):
        x, y = ra[c], rb[c]
        if not (x or y):
            continue
        worst = max(worst, (m00 * x + m01 * y).k, (m10 * x + m11 * y).k)
    return worst


def _imag_pairs(R, j, q):
    """Pair the odd entries of column j and pick a prefix for each pair.

    F has i sqrt2-exponent 2, so a careless choice can raise the exponent of
    the remaining columns faster than the current column drops.  Among all
    admissible (pair, prefix) choices we greedily take the ones creating the
    smallest exponent in the untouched columns; ties go to ascending indices
    and then to the lexicographically least prefix.
    """
    odd = _imag_odd(R, j, q)
    cands = []
    for x in range(len(odd)):
        a, ua = odd[x]
        for b, ub in odd[x + 1:]:
            for m in _IMAG_PREFIXES:
                M = _IMAG_PREFIX_MATS[m]
                if all(_divisible(t, "isqrt2") for t in _pair_apply(M, ua, ub)):
                    cands.append((_growth(R, j, a, b, M), a, b, m))
    cands.sort()
    used, chosen = set(), []
    for _, a, b, m in cands:
        if a in used or b in used:
            continue
        used.update((a, b))
        chosen.append((a, b, m))
    if len(used) != len(odd):
        raise InvariantError("could not pair the odd entries of column %d" % (j + 1))
    return chosen


def _imag_step(R: _Reducer):
    def step(j, q):
        for a, b, (m0, m1, m2, m3) in _imag_pairs(R, j, q):
            if m3:
                R.apply("X2", [a, b])
            if m2:
                R.apply("NEG1", [b])
            if m1:
                R.apply("NEG1", [a])
            R.apply("F2", [a, b], m0)
    return step


def _imag_af_step(R: _Reducer):
    def step(j, q):
        for a, b, m in _imag_pairs(R, j, q):
            if m not in IMAG_ANCILLAFREE:
                raise InvariantError("no ancilla-free replacement for prefix %r" % (m,))
            for kind in IMAG_ANCILLAFREE[m]:
                R.apply(kind, [a, b])
    return step


def _gauss_odd(R, j, q):
    scale = omega_pow(q) * RingScalar(1).mul_sqrt2_pow(q)
    odd = []
    for i, u in _numerators(R.column(j), j, scale):
        r = _gauss_class(u).c
        if r in ((1, 0, 0, 0), (0, 0, 1, 0)):
            odd.append((i, u))
    _check_count(odd, 2, "odd mod 2")
    return [odd[t:t + 2] for t in range(0, len(odd), 2)]


def _gauss_step(R: _Reducer):
    def step(j, q):
        for (a, ua), (b, ub) in _gauss_odd(R, j, q):
            (m1, m2), _ = reduce_pair_gaussian(ua, ub)
            R.apply("I4", [a], m1)
            R.apply("I4", [b], m2)
            R.apply("WH2", [a, b])
    return step


def _gauss_af_step(R: _Reducer):
    def step(j, q):
        for (a, ua), (b, ub) in _gauss_odd(R, j, q):
            m, _ = reduce_pair_gaussian(ua, ub, max_exponent=1)
            for kind in GAUSS_ANCILLAFREE[m]:
                R.apply(kind, [a, b])
    return step


def _finish(R: _Reducer, V: RingMatrix, gs: GateSet, ancilla_free=False) -> SynthResult:
    word = R.word()
    ok = word.apply_to(V) == RingMatrix.identity(V.nrows)
    if not ok:
        raise InvariantError("synthesized word does not invert the input")
    return SynthResult(word, gs, ONE, ok, R.trace, ancilla_free)


def _require_ring(V, tag, what):
    if not is_unitary(V):
        raise NotUnitaryError("matrix is not unitary" + _unitary_diagnostic(V))
    if tag not in matrix_tags(V):
        raise DomainError("%s synthesis needs a matrix over %s" % (what, tag))


def _int_base(R, j):
    i, x = R.unit_position(j)
    if i != j:
        if x == -1:
            R.apply("NEG1", [i])
        R.apply("X2", [j, i])
    elif x == -1:
        R.apply("NEG1", [j])


def _run_integral(R: _Reducer):
    step = _integral_step(R)
    for j in range(R.n):
        R.reduce_column(j, "2", RingTag.Z, step)
        _int_base(R, j)


def synth_integral(V: RingMatrix) -> SynthResult:
    _require_ring(V, RingTag.D, "integral")
    R = _Reducer(V)
    _run_integral(R)
    return _finish(R, V, INT)


def synth_superintegral(V: RingMatrix) -> SynthResult:
    _require_ring(V, RingTag.Z_over_sqrt2, "super-integral")
    q = lde(V, "sqrt2", RingTag.Z)
    R = _Reducer(V)
    if q % 2:
        if V.nrows % 2:
            raise NotUnitaryError("input not unitary: odd dimension with odd sqrt2-exponent")
        R.apply("GLOBAL_IH")
    _run_integral(R)
    return _finish(R, V, SUPINT)


def synth_real(V: RingMatrix) -> SynthResult:
    _require_ring(V, RingTag.Dsqrt2, "real")
    R = _Reducer(V)
    step = _real_step(R)
    for j in range(R.n):
        R.reduce_column(j, "sqrt2", RingTag.Zsqrt2, step)
        _int_base(R, j)
    return _finish(R, V, REAL)


def synth_imaginary(V: RingMatrix) -> SynthResult:
    _require_ring(V, RingTag.Disqrt2, "imaginary")
    R = _Reducer(V)
    step = _imag_step(R)
    for j in range(R.n):
        R.reduce_column(j, "isqrt2", RingTag.Zisqrt2, step)
        _int_base(R, j)
    return _finish(R, V, IMAG)


def _gauss_base(R, j):
    i, x = R.unit_position(j)
    m = next(e for e in range(4) if i_pow(e) == x)
    if i != j:
        R.apply("I4", [i], -m)
        R.apply("X2", [j, i])
    else:
        R.apply("I4", [j], -m)


def _run_gaussian(R: _Reducer):
    step = _gauss_step(R)
    for j in range(R.n):
        R.reduce_column(j, "1+i", RingTag.Zi, step)
        _gauss_base(R, j)


def synth_gaussian(V: RingMatrix) -> SynthResult:
    _require_ring(V, RingTag.Di, "Gaussian")
    R = _Reducer(V)
    _run_gaussian(R)
    return _finish(R, V, GAUSS)


def synth_supergaussian(V: RingMatrix) -> SynthResult:
    _require_ring(V, RingTag.Zi_over_sqrt2, "super-Gaussian")
    q = lde(V, "sqrt2", RingTag.Zi)
    R = _Reducer(V)
    if q % 2:
        R.apply("GLOBAL_OMEGA")
    _run_gaussian(R)
    return _finish(R, V, SUPGAUSS)


ANCILLA_FREE_MIN_DIM = 16


def _check_det(V):
    d = det_exact(V)
    if d != ONE:
        raise DeterminantError("not ancilla-free representable: det = %s" % d)


def synth_imaginary_ancillafree(V: RingMatrix) -> SynthResult:
    """Word over determinant-1 generators XZ, ZX, FZ, ZF and four-level I x Z.

    Below dimension 16 the determinant condition is vacuous for circuits, so
    the ordinary imaginary word is returned instead.
    """
    _require_ring(V, RingTag.Disqrt2, "imaginary")
    if V.nrows < ANCILLA_FREE_MIN_DIM:
        return synth_imaginary(V)
    _check_det(V)
    R = _Reducer(V)
    step = _imag_af_step(R)
    n = R.n
    for j in range(n):
        R.reduce_column(j, "isqrt2", RingTag.Zisqrt2, step)
        i, x = R.unit_position(j)
        if i != j:
            R.apply("ZX2" if x == ONE else "XZ2", [j, i])
    negs = [j for j in range(n) if R.rows[j][j] == -1]
    _check_count(negs, 2, "equal to -1 on the diagonal")
    for t in range(0, len(negs), 2):
        p, q = negs[t:t + 2]
        a, c = [x for x in range(n) if x not in (p, q)][:2]
        R.apply("Z2", [a, p, c, q])
    return _finish(R, V, IMAG, ancilla_free=True)


def synth_gaussian_ancillafree(V: RingMatrix) -> SynthResult:
    """Word over determinant-1 generators iZ, iX, wSH and wHS."""
    _require_ring(V, RingTag.Di, "Gaussian")
    if V.nrows < ANCILLA_FREE_MIN_DIM:
        return synth_gaussian(V)
    _check_det(V)
    R = _Reducer(V)
    step = _gauss_af_step(R)
    n = R.n
    for j in range(n):
        R.reduce_column(j, "1+i", RingTag.Zi, step)
        i, x = R.unit_position(j)
        if i != j:
            R.apply("IX2", [j, i])
    for j in range(n - 1):
        c = next(e for e in range(4) if i_pow(e) == R.rows[j][j])
        if c:
            R.apply("IZ2", [j, j + 1], -c)
    return _finish(R, V, GAUSS, ancilla_free=True)


_DISPATCH = {
    "INT": synth_integral,
    "SUPINT": synth_superintegral,
    "REAL": synth_real,
    "IMAG": synth_imaginary,
    "GAUSS": synth_gaussian,
    "SUPGAUSS": synth_supergaussian,
}
_DISPATCH_AF = {"IMAG": synth_imaginary_ancillafree, "GAUSS": synth_gaussian_ancillafree}


def choose_gateset(V: RingMatrix, gateset="auto", ancilla_policy="allow_one") -> GateSet:
    tag = classify_matrix(V)
    tags = matrix_tags(V)
    if gateset in (None, "auto"):
        if ancilla_policy == "ancilla_free":
            for gs in (IMAG, GAUSS):
                if gs.ring in tags:
                    return gs
            raise UnsupportedError("no ancilla-free gate set covers ring %s" % tag)
        if tag == RingTag.Domega:
            raise UnsupportedError("unsupported ring: use Giles-Selinger synthesis for Domega")
        return FOR_TAG[tag]
    gs = get_gateset(gateset)
    if gs.ring not in tags:
        raise UnsupportedError("matrix (ring %s) is not over the ring %s of gate set %s"
                               % (tag, gs.ring, gs.tag))
    return gs


def synthesize(req: SynthRequest) -> SynthResult:
    V = req.matrix
    if req.ancilla_policy not in ("allow_one", "ancilla_free"):
        raise ValueError("ancilla policy must be allow_one or ancilla_free")
    gs = choose_gateset(V, req.gateset, req.ancilla_policy)
    if req.ancilla_policy == "ancilla_free":
        if gs.tag not in _DISPATCH_AF:
            raise UnsupportedError("no ancilla-free synthesis for gate set %s" % gs.tag)
        return _DISPATCH_AF[gs.tag](V)
    return _DISPATCH[gs.tag](V)


def generator_ring(op: MultiLevelOp) -> RingTag:
    """Smallest ring tag of an embedded generator (used for closure checks)."""
    from .linalg import embed
    return classify_matrix(embed(op))
