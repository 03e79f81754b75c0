"""Exact dense matrices over D[w], multi-level operators and generator words.

Matrix methods use 0-based Python indexing.  Generator levels are 1-based,
as are basis vectors built by `basis`.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import DomainError, NotUnitaryError, ParseError
from .rings import (
    HALF, I, INV_SQRT2, ONE, ZERO, OMEGA, RingInt, RingScalar, RingTag,
    as_scalar, format_scalar, i_pow, omega_pow, parse_scalar, scalar_tags, tag_leq,
)


class RingMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [[as_scalar(x) for x in r] for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows) or not rows[0]:
            raise ValueError("matrix rows must be non-empty and of equal length")
        self.rows = rows

    @classmethod
    def _wrap(cls, rows):
        obj = object.__new__(cls)
        obj.rows = rows
        return obj

    @classmethod
    def identity(cls, n):
        return cls._wrap([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r, c):
        return cls._wrap([[ZERO] * c for _ in range(r)])

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def copy_rows(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __repr__(self):
        return "RingMatrix(%dx%d)" % self.shape

    def __str__(self):
        return format_matrix(self)

    def __neg__(self):
        return RingMatrix._wrap([[-x for x in r] for r in self.rows])

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("dimension mismatch")
        return RingMatrix._wrap([[x + y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> RingMatrix:
        s = as_scalar(s)
        return RingMatrix._wrap([[s * x if x else ZERO for x in r] for r in self.rows])

    def __matmul__(self, other):
        return mul(self, other)

    def dagger(self):
        return dagger(self)

    def kron(self, other):
        rows = []
        for ra in self.rows:
            for rb in other.rows:
                rows.append([a * b if a and b else ZERO for a in ra for b in rb])
        return RingMatrix._wrap(rows)

    def is_unitary(self):
        return is_unitary(self)

    def max_k(self):
        return max(x.k for r in self.rows for x in r)


def mul(A: RingMatrix, B: RingMatrix) -> RingMatrix:
    if A.ncols != B.nrows:
        raise ValueError("dimension mismatch: %r @ %r" % (A, B))
    cols = B.ncols
    out = []
    for ra in A.rows:
        acc = [ZERO] * cols
        for a, rb in zip(ra, B.rows):
            if not a:
                continue
            for j, b in enumerate(rb):
                if b:
                    acc[j] = acc[j] + a * b
        out.append(acc)
    return RingMatrix._wrap(out)


def dagger(M: RingMatrix) -> RingMatrix:
    r, c = M.shape
    return RingMatrix._wrap([[M.rows[i][j].conj() for i in range(r)] for j in range(c)])


def is_unitary(M: RingMatrix) -> bool:
    r, c = M.shape
    if r != c:
        return False
    return mul(dagger(M), M) == RingMatrix.identity(r)


def basis(n: int, j: int) -> RingMatrix:
    """Column vector e_j of length n, j 1-based."""
    if not 1 <= j <= n:
        raise ValueError("basis index out of range")
    return RingMatrix._wrap([[ONE if i == j - 1 else ZERO] for i in range(n)])


def from_ints(rows) -> RingMatrix:
    return RingMatrix([[RingScalar(int(x)) for x in r] for r in rows])


# ---------------------------------------------------------------------------
# kernels of the generators

def _m(rows):
    return RingMatrix(rows)


_h = INV_SQRT2
_mi = -I
MAT_X = _m([[0, 1], [1, 0]])
MAT_Z = _m([[1, 0], [0, -1]])
MAT_H = _m([[_h, _h], [_h, -_h]])
MAT_S = _m([[1, 0], [0, I]])
MAT_T = _m([[1, 0], [0, OMEGA]])
MAT_F = _m([[HALF * RingScalar(RingInt(1, 1, 0, 1)), HALF],
            [HALF, HALF * RingScalar(RingInt(-1, 1, 0, 1))]])
MAT_WH = MAT_H.scale(OMEGA)
MAT_HH = MAT_H.kron(MAT_H)
MAT_IZ2 = RingMatrix.identity(2).kron(MAT_Z)

KERNELS = {
    "NEG1": _m([[-1]]),
    "I4": _m([[I]]),
    "X2": MAT_X,
    "H2": MAT_H,
    "HH4": MAT_HH,
    "F2": MAT_F,
    "WH2": MAT_WH,
    "XZ2": MAT_X @ MAT_Z,
    "ZX2": MAT_Z @ MAT_X,
    "FZ2": MAT_F @ MAT_Z,
    "ZF2": MAT_Z @ MAT_F,
    "IZ2": MAT_Z.scale(I),
    "IX2": MAT_X.scale(I),
    "WSH2": (MAT_S @ MAT_H).scale(OMEGA),
    "WHS2": (MAT_H @ MAT_S).scale(OMEGA),
    "Z2": MAT_IZ2,
}

ORDERS = {
    "NEG1": 2, "I4": 4, "X2": 2, "H2": 2, "HH4": 2, "F2": 8, "WH2": 8,
    "XZ2": 4, "ZX2": 4, "FZ2": 6, "ZF2": 6, "IZ2": 4, "IX2": 4,
    "WSH2": 6, "WHS2": 6, "Z2": 2, "GLOBAL_IH": 2, "GLOBAL_OMEGA": 8,
}

GLOBAL_KINDS = ("GLOBAL_IH", "GLOBAL_OMEGA")
ARITY = {k: v.nrows for k, v in KERNELS.items()}
ARITY.update({k: 0 for k in GLOBAL_KINDS})


def matpow(M: RingMatrix, e: int) -> RingMatrix:
    r = RingMatrix.identity(M.nrows)
    for _ in range(e):
        r = r @ M
    return r


@lru_cache(maxsize=None)
def kernel(kind: str, exponent: int = 1) -> RingMatrix:
    e = exponent % ORDERS[kind]
    return matpow(KERNELS[kind], e)


class MultiLevelOp:
    """A multi-level operator W_[a1,...,am] raised to a power, acting on dim levels."""

    __slots__ = ("kind", "levels", "exponent", "dim")

    def __init__(self, kind: str, levels=(), exponent: int = 1, dim: int | None = None):
        if kind not in ORDERS:
            raise ValueError("unknown generator kind %r" % kind)
        levels = tuple(int(x) for x in levels)
        if len(levels) != ARITY[kind]:
            raise ValueError("%s takes %d levels, got %d" % (kind, ARITY[kind], len(levels)))
        if len(set(levels)) != len(levels):
            raise ValueError("levels must be distinct: %r" % (levels,))
        if any(a < 1 for a in levels):
            raise ValueError("levels are 1-based")
        if dim is not None:
            if any(a > dim for a in levels):
                raise ValueError("level out of range for dimension %d" % dim)
            if kind == "GLOBAL_IH" and dim % 2:
                raise ValueError("GLOBAL_IH needs even dimension")
        self.kind = kind
        self.levels = levels
        self.exponent = int(exponent) % ORDERS[kind]
        self.dim = dim

    def __eq__(self, other):
        return (isinstance(other, MultiLevelOp) and self.kind == other.kind
                and self.levels == other.levels and self.exponent == other.exponent)

    def __hash__(self):
        return hash((self.kind, self.levels, self.exponent))

    def __repr__(self):
        return "MultiLevelOp(%s)" % format_op(self)

    def inverse(self) -> MultiLevelOp:
        return MultiLevelOp(self.kind, self.levels, ORDERS[self.kind] - self.exponent, self.dim)

    def kernel(self) -> RingMatrix:
        return kernel(self.kind, self.exponent)

    def with_dim(self, dim):
        return MultiLevelOp(self.kind, self.levels, self.exponent, dim)


def embed(op: MultiLevelOp, dim: int | None = None) -> RingMatrix:
    dim = dim or op.dim
    if dim is None:
        raise ValueError("embedding needs a dimension")
    rows = RingMatrix.identity(dim).copy_rows()
    apply_op_rows(rows, op.with_dim(dim))
    return RingMatrix._wrap(rows)


def _combine(K, sub):
    m = len(sub)
    out = []
    for r in range(m):
        terms = [(K[r][c], sub[c]) for c in range(m) if K[r][c]]
        if len(terms) == 1:
            coef, row = terms[0]
            if coef == ONE:
                out.append(row)
            else:
                out.append([coef * x if x else ZERO for x in row])
            continue
        acc = [ZERO] * len(sub[0])
        for coef, row in terms:
            for j, x in enumerate(row):
                if x:
                    acc[j] = acc[j] + coef * x
        out.append(acc)
    return out


def apply_op_rows(rows, op: MultiLevelOp):
    """Left-multiply the row list `rows` by embed(op), in place."""
    if op.exponent == 0:
        return
    if op.kind == "GLOBAL_OMEGA":
        w = omega_pow(op.exponent)
        for i, r in enumerate(rows):
            rows[i] = [w * x if x else ZERO for x in r]
        return
    if op.kind == "GLOBAL_IH":
        if len(rows) % 2:
            raise DomainError("GLOBAL_IH needs even dimension")
        K = kernel("H2", op.exponent).rows
        for j in range(0, len(rows), 2):
            rows[j], rows[j + 1] = _combine(K, [rows[j], rows[j + 1]])
        return
    K = op.kernel().rows
    idx = [a - 1 for a in op.levels]
    new = _combine(K, [rows[i] for i in idx])
    for i, r in zip(idx, new):
        rows[i] = r


class GeneratorWord:
    """Generators G_1 ... G_l; the word's matrix is the product G_1 G_2 ... G_l."""

    def __init__(self, dim: int, ops=()):
        self.dim = int(dim)
        self.ops = [op.with_dim(self.dim) for op in ops]

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __eq__(self, other):
        return isinstance(other, GeneratorWord) and self.dim == other.dim and self.ops == other.ops

    def __repr__(self):
        return "GeneratorWord(dim=%d, len=%d)" % (self.dim, len(self.ops))

    def apply_to(self, M: RingMatrix) -> RingMatrix:
        """G_1 ... G_l M."""
        rows = M.copy_rows()
        for op in reversed(self.ops):
            apply_op_rows(rows, op)
        return RingMatrix._wrap(rows)

    def matrix(self) -> RingMatrix:
        return self.apply_to(RingMatrix.identity(self.dim))

    def inverse(self) -> GeneratorWord:
        return GeneratorWord(self.dim, [op.inverse() for op in reversed(self.ops)])

    def kinds(self):
        return {op.kind for op in self.ops}


# ---------------------------------------------------------------------------
# denominator exponents

_BASE_ALIASES = {
    "2": "2", 2: "2", "sqrt2": "sqrt2", "√2": "sqrt2", "rt2": "sqrt2",
    "isqrt2": "isqrt2", "i√2": "isqrt2", "irt2": "isqrt2", "1+i": "1+i",
}
_DEFAULT_RING = {"2": RingTag.Z, "sqrt2": RingTag.Zsqrt2, "isqrt2": RingTag.Zisqrt2, "1+i": RingTag.Zi}


def _base_power(x: RingScalar, base: str, q: int) -> RingScalar:
    if base == "2":
        return x.mul_sqrt2_pow(2 * q)
    y = x.mul_sqrt2_pow(q)
    if base == "isqrt2":
        return y * i_pow(q)
    if base == "1+i":
        return y * omega_pow(q)
    return y


def _entries(M):
    if isinstance(M, RingMatrix):
        return [x for r in M.rows for x in r]
    if isinstance(M, (list, tuple)):
        return [as_scalar(x) for x in M]
    return [as_scalar(M)]


def lde(M, base="sqrt2", ring=None) -> int:
    """Least q such that base^q M has entries in `ring`.

    `ring` defaults to Z for base 2, Z[sqrt2] for sqrt2, Z[i sqrt2] for i sqrt2
    and Z[i] for 1+i.  Passing ring=Z or Zi with base sqrt2 gives the exponent
    of the forms W / sqrt2^q used by the super-integral and super-Gaussian sets.
    M may be a matrix, a list of scalars, or a scalar.
    """
    b = _BASE_ALIASES.get(base)
    if b is None:
        raise ValueError("unsupported base %r" % (base,))
    ring = RingTag(ring) if ring is not None else _DEFAULT_RING[b]
    xs = [x for x in _entries(M) if x]
    if not xs:
        return 0
    kmax = max(x.k for x in xs)
    lb = (kmax + 1) // 2 if b == "2" else kmax
    for q in range(lb, lb + 4):
        if all(ring in scalar_tags(_base_power(x, b, q)) for x in xs):
            return q
    raise DomainError("entries do not lie in %s[1/%s]" % (ring, base))


# ---------------------------------------------------------------------------
# determinant

def det_exact(M: RingMatrix) -> RingScalar:
    n, c = M.shape
    if n != c:
        raise ValueError("determinant of a non-square matrix")
    K = M.max_k()
    W = [[x.mul_sqrt2_pow(K).to_ringint() for x in r] for r in M.rows]
    sign = 1
    prev = RingInt(1)
    for k in range(n - 1):
        if W[k][k].is_zero():
            for i in range(k + 1, n):
                if not W[i][k].is_zero():
                    W[k], W[i] = W[i], W[k]
                    sign = -sign
                    break
            else:
                return ZERO
        p = W[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                W[i][j] = (W[i][j] * p - W[i][k] * W[k][j]).exact_div(prev)
        prev = p
    return RingScalar(W[n - 1][n - 1] * sign, K * n)


# ---------------------------------------------------------------------------
# classification

MATRIX_TAGS = (RingTag.D, RingTag.Z_over_sqrt2, RingTag.Dsqrt2, RingTag.Disqrt2, RingTag.Di,
               RingTag.Zi_over_sqrt2, RingTag.Domega)


def _super_ok(xs, tag) -> bool:
    # all nonzero entries must admit a common q with x sqrt2^q over Z (or Z[i]);
    # the admissible q for one entry form q0, q0+2, ... so parities must agree
    parity = None
    for x in xs:
        if tag not in scalar_tags(x):
            return False
        plain = RingTag.Z if tag == RingTag.Z_over_sqrt2 else RingTag.Zi
        q0 = x.k if plain in scalar_tags(x.mul_sqrt2_pow(x.k)) else x.k + 1
        if parity is None:
            parity = q0 % 2
        elif parity != q0 % 2:
            return False
    return True


def matrix_tags(M) -> frozenset:
    """Every ring tag whose matrices (or common-denominator forms) contain M."""
    xs = [x for x in _entries(M) if x]
    tags = set(RingTag)
    for x in xs:
        tags &= scalar_tags(x)
    for t in (RingTag.Z_over_sqrt2, RingTag.Zi_over_sqrt2):
        if t in tags and not _super_ok(xs, t):
            tags.discard(t)
    return frozenset(tags)


def minimal_tag(tags, candidates=MATRIX_TAGS) -> RingTag:
    """The least tag among candidates present in tags.

    The only incomparable minimal pair that can occur is Disqrt2 versus
    Zi_over_sqrt2 (for example iH); candidate order resolves it to Disqrt2.
    """
    present = [t for t in candidates if t in tags]
    minimal = [t for t in present if not any(u != t and tag_leq(u, t) for u in present)]
    return minimal[0]


def classify_matrix(M: RingMatrix) -> RingTag:
    if not is_unitary(M):
        raise NotUnitaryError("matrix is not unitary" + _unitary_diagnostic(M))
    return minimal_tag(matrix_tags(M))


def _unitary_diagnostic(M):
    r, c = M.shape
    if r != c:
        return " (shape %dx%d)" % (r, c)
    P = mul(dagger(M), M)
    for i in range(r):
        for j in range(c):
            want = ONE if i == j else ZERO
            if P.rows[i][j] != want:
                return ": (M^dag M)[%d,%d] = %s" % (i + 1, j + 1, format_scalar(P.rows[i][j]))
    return ""


def check_unitary(M: RingMatrix):
    if not is_unitary(M):
        raise NotUnitaryError("matrix is not unitary" + _unitary_diagnostic(M))


# ---------------------------------------------------------------------------
# text formats

def format_matrix(M: RingMatrix) -> str:
    r, c = M.shape
    lines = ["dim %d %d" % (r, c)]
    for row in M.rows:
        lines.append(" ".join(format_scalar(x) for x in row))
    return "\n".join(lines) + "\n"


def _content_lines(text):
    for no, line in enumerate(text.splitlines(), 1):
        s = line.split("#", 1)[0].strip()
        if s:
            yield no, s


def parse_matrix(text: str) -> RingMatrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty matrix file")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != "dim":
        raise ParseError("line %d: expected 'dim r c'" % no)
    try:
        r, c = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError("line %d: bad dimensions" % no) from None
    body = lines[1:]
    if len(body) != r:
        raise ParseError("expected %d rows, found %d" % (r, len(body)))
    rows = []
    for no, line in body:
        toks = line.split()
        if len(toks) != c:
            raise ParseError("line %d: expected %d entries, found %d" % (no, c, len(toks)))
        try:
            rows.append([parse_scalar(t) for t in toks])
        except ValueError as e:
            raise ParseError("line %d: %s" % (no, e)) from None
    return RingMatrix(rows)


def format_op(op: MultiLevelOp) -> str:
    parts = [op.kind] + [str(a) for a in op.levels]
    if op.exponent != 1:
        parts.append("^%d" % op.exponent)
    return " ".join(parts)


def format_word(w: GeneratorWord) -> str:
    return "\n".join(["gens dim=%d" % w.dim] + [format_op(op) for op in w.ops]) + "\n"


def parse_word(text: str) -> GeneratorWord:
    lines = list(_content_lines(text))
    if not lines or not lines[0][1].startswith("gens"):
        raise ParseError("line 1: expected 'gens dim=N' header")
    no, head = lines[0]
    try:
        dim = int(head.split("dim=", 1)[1])
    except (IndexError, ValueError):
        raise ParseError("line %d: bad header %r" % (no, head)) from None
    ops = []
    for no, line in lines[1:]:
        toks = line.split()
        exp = 1
        if toks[-1].startswith("^"):
            try:
                exp = int(toks.pop()[1:])
            except ValueError:
                raise ParseError("line %d: bad exponent" % no) from None
        try:
            ops.append(MultiLevelOp(toks[0], [int(t) for t in toks[1:]], exp, dim))
        except ValueError as e:
            raise ParseError("line %d: %s" % (no, e)) from None
    return GeneratorWord(dim, ops)
