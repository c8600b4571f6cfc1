"""Exact dense linear algebra over the rationals and prime fields.

Rational entries are ``gmpy2.mpq`` values (always in lowest terms); entries
over F_p are Python ints in ``range(p)``.  Nothing in here ever touches a
float.

Most callers inside the package work with plain lists of lists for speed and
only wrap results in :class:`Matrix` at API boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gmpy2 import mpq

__all__ = [
    "FieldSpec",
    "Matrix",
    "QQ",
    "GF",
    "rref",
    "kernel_basis",
    "solve",
    "Echelon",
    "sparse_nullspace",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A ground field: ``FieldSpec("rationals")`` or ``FieldSpec("prime", p)``."""

    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise ValueError("the rationals have characteristic 0")
        elif self.kind == "prime":
            if not _is_prime(self.characteristic):
                raise ValueError(f"{self.characteristic} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def zero(self):
        return mpq(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return mpq(1) if self.characteristic == 0 else 1

    def __call__(self, x):
        """Coerce an int, Fraction, mpq or string like ``"-2/3"`` into the field."""
        p = self.characteristic
        if isinstance(x, str):
            x = Fraction(x.strip())
        if p == 0:
            if isinstance(x, Fraction):
                return mpq(x.numerator, x.denominator)
            return mpq(x)
        if isinstance(x, int):
            return x % p
        x = Fraction(str(x)) if not isinstance(x, Fraction) else x
        if x.denominator % p == 0:
            raise ZeroDivisionError(f"{x} has no image in F_{p}")
        return x.numerator * pow(x.denominator, -1, p) % p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / x
        return pow(x, -1, self.characteristic)

    def fmt(self, x) -> str:
        return str(x)

    def elements(self):
        if self.characteristic == 0:
            raise ValueError("the rationals are infinite")
        return range(self.characteristic)

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def to_json(self):
        if self.characteristic == 0:
            return "rationals"
        return {"prime": self.characteristic}


QQ = FieldSpec("rationals")


def GF(p: int) -> FieldSpec:
    return FieldSpec("prime", p)


# ---------------------------------------------------------------------------
# list-level kernels

def _rref_lists(rows, ncols, p):
    """In-place style RREF of a list of row lists; returns (nonzero rows, pivots)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = (1 / prow[c]) if p == 0 else pow(prow[c], -1, p)
        if p == 0:
            prow = [x * inv for x in prow]
        else:
            prow = [x * inv % p for x in prow]
        rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    if p == 0:
                        rows[i] = [a - f * b if b else a for a, b in zip(row, prow)]
                    else:
                        rows[i] = [(a - f * b) % p if b else a for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def _matmul_lists(a, b, p):
    if not a or not b or not b[0]:
        return [[0 if p else mpq(0)] * (len(b[0]) if b else 0) for _ in a]
    bt = list(zip(*b))
    zero = 0 if p else mpq(0)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        if not nz:
            out.append([zero] * len(bt))
            continue
        new = []
        for col in bt:
            s = zero
            for k, x in nz:
                y = col[k]
                if y:
                    s += x * y
            new.append(s % p if p else s)
        out.append(new)
    return out


def _matvec(a, v, p):
    zero = 0 if p else mpq(0)
    nz = [(k, x) for k, x in enumerate(v) if x]
    out = []
    for row in a:
        s = zero
        for k, x in nz:
            y = row[k]
            if y:
                s += x * y
        out.append(s % p if p else s)
    return out


class Echelon:
    """An incrementally grown subspace of F^n kept in reduced row echelon form."""

    def __init__(self, field: FieldSpec, n: int, vectors=()):
        self.field = field
        self.n = n
        self.rows: dict[int, list] = {}  # pivot column -> row with 1 at pivot
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        p = self.field.characteristic
        v = list(v)
        for c, row in self.rows.items():
            f = v[c]
            if f:
                if p == 0:
                    v = [a - f * b if b else a for a, b in zip(v, row)]
                else:
                    v = [(a - f * b) % p if b else a for a, b in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def add(self, v) -> bool:
        """Add ``v``; return True if it enlarged the span."""
        p = self.field.characteristic
        v = self.reduce(v)
        c = next((i for i, x in enumerate(v) if x), None)
        if c is None:
            return False
        inv = self.field.inv(v[c])
        v = [x * inv % p for x in v] if p else [x * inv for x in v]
        for k, row in self.rows.items():
            f = row[c]
            if f:
                if p == 0:
                    self.rows[k] = [a - f * b if b else a for a, b in zip(row, v)]
                else:
                    self.rows[k] = [(a - f * b) % p if b else a for a, b in zip(row, v)]
        self.rows[c] = v
        return True

    def pivots(self):
        return sorted(self.rows)

    def basis(self):
        """Basis rows sorted by pivot column."""
        return [self.rows[c] for c in sorted(self.rows)]

    def complement_positions(self):
        piv = set(self.rows)
        return [i for i in range(self.n) if i not in piv]

    def coordinates(self, v):
        """Coordinates of ``v`` (assumed in the span) w.r.t. :meth:`basis`."""
        return [v[c] for c in sorted(self.rows)]


def _sparse_forward(equations, field: FieldSpec) -> dict:
    """Forward elimination: ``{pivot: row}`` with each row's smallest key its pivot."""
    p = field.characteristic
    piv_rows: dict[int, dict] = {}
    for eq in equations:
        row = {k: v for k, v in eq.items() if v}
        while row:
            c = min(row)
            if c not in piv_rows:
                inv = field.inv(row[c])
                piv_rows[c] = {k: (v * inv % p if p else v * inv) for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv_rows[c].items():
                nv = row.get(k, 0) - f * v
                if p:
                    nv %= p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return piv_rows


def sparse_nullspace(equations, nvars, field: FieldSpec):
    """Null space of a sparse homogeneous system.

    ``equations`` is an iterable of dicts ``{var: coeff}``.  Returns
    ``(basis, free_vars)`` where ``basis[k]`` is a dense vector with a 1 in
    position ``free_vars[k]`` and 0 in every other free position.
    """
    p = field.characteristic
    piv_rows = _sparse_forward(equations, field)
    # back substitution, largest pivot first, so every row ends up reduced
    for c in sorted(piv_rows, reverse=True):
        row = piv_rows[c]
        for k in sorted(k for k in row if k != c and k in piv_rows):
            f = row.get(k)
            if not f:
                continue
            for k2, v in piv_rows[k].items():
                nv = row.get(k2, 0) - f * v
                if p:
                    nv %= p
                if nv:
                    row[k2] = nv
                else:
                    row.pop(k2, None)
    free = [i for i in range(nvars) if i not in piv_rows]
    zero = field.zero
    one = field.one
    basis = []
    for f in free:
        v = [zero] * nvars
        v[f] = one
        for c, row in piv_rows.items():
            x = row.get(f)
            if x:
                v[c] = (-x) % p if p else -x
        basis.append(v)
    return basis, free


def sparse_rank(equations, field: FieldSpec) -> int:
    return len(_sparse_forward(equations, field))


# ---------------------------------------------------------------------------
# public Matrix type

class Matrix:
    """Immutable dense matrix over a :class:`FieldSpec`."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: FieldSpec, rows, ncols=None):
        rows = [[field(x) for x in r] for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self._rows = rows

    @classmethod
    def _raw(cls, field, rows, ncols):
        m = object.__new__(cls)
        m.field = field
        m.nrows = len(rows)
        m.ncols = ncols
        m._rows = rows
        return m

    @classmethod
    def zeros(cls, field, r, c):
        z = field.zero
        return cls._raw(field, [[z] * c for _ in range(r)], c)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls._raw(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def entries(self):
        return tuple(x for r in self._rows for x in r)

    def tolist(self):
        return [list(r) for r in self._rows]

    def row(self, i):
        return list(self._rows[i])

    def col(self, j):
        return [r[j] for r in self._rows]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self._rows == other._rows)

    def __hash__(self):
        return hash((self.field, self.shape, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"Matrix<{self.field}>[{body}]"

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            rows = _matmul_lists(self._rows, other._rows, self.field.characteristic)
            return Matrix._raw(self.field, rows, other.ncols)
        v = list(other)
        if len(v) != self.ncols:
            raise ValueError("shape mismatch in matrix-vector product")
        return _matvec(self._rows, v, self.field.characteristic)

    def __add__(self, other):
        p = self.field.characteristic
        rows = [[(a + b) % p if p else a + b for a, b in zip(r, s)]
                for r, s in zip(self._rows, other._rows)]
        return Matrix._raw(self.field, rows, self.ncols)

    def __sub__(self, other):
        p = self.field.characteristic
        rows = [[(a - b) % p if p else a - b for a, b in zip(r, s)]
                for r, s in zip(self._rows, other._rows)]
        return Matrix._raw(self.field, rows, self.ncols)

    def scale(self, c):
        p = self.field.characteristic
        c = self.field(c)
        rows = [[(c * a) % p if p else c * a for a in r] for r in self._rows]
        return Matrix._raw(self.field, rows, self.ncols)

    @property
    def T(self):
        rows = [[r[j] for r in self._rows] for j in range(self.ncols)]
        return Matrix._raw(self.field, rows, self.nrows)

    def is_zero(self):
        return not any(x for r in self._rows for x in r)

    def rref(self):
        return rref(self)

    def rank(self):
        return rref(self)[1]

    def kernel_basis(self):
        return kernel_basis(self)


def rref(m: Matrix):
    """Return ``(reduced, rank, pivot_cols)``; pivots taken first-nonzero in column order."""
    rows, piv = _rref_lists(m._rows, m.ncols, m.field.characteristic)
    z = m.field.zero
    full = rows + [[z] * m.ncols for _ in range(m.nrows - len(rows))]
    return Matrix._raw(m.field, full, m.ncols), len(piv), piv


def kernel_basis(m: Matrix):
    """Basis of the right null space ``{x : m x = 0}``, one vector per free column."""
    p = m.field.characteristic
    rows, piv = _rref_lists(m._rows, m.ncols, p)
    pivset = set(piv)
    z, o = m.field.zero, m.field.one
    out = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = [z] * m.ncols
        v[f] = o
        for r, c in zip(rows, piv):
            x = r[f]
            if x:
                v[c] = (-x) % p if p else -x
        out.append(v)
    return out


def solve(a: Matrix, b):
    """Some ``x`` with ``a x = b``, or None when the system is inconsistent."""
    b = [a.field(x) for x in b]
    if len(b) != a.nrows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {a.nrows}")
    aug = [r + [y] for r, y in zip(a._rows, b)]
    p = a.field.characteristic
    rows, piv = _rref_lists(aug, a.ncols + 1, p)
    if piv and piv[-1] == a.ncols:
        return None
    x = [a.field.zero] * a.ncols
    for r, c in zip(rows, piv):
        x[c] = r[a.ncols]
    return x


class SparseEchelon:
    """Fully reduced sparse row space; row keys are any totally ordered values.

    The pivot of a row is its smallest key, so callers choose the ordering of
    keys to control which coordinates become pivots.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows: dict = {}
        self._occ: dict = {}  # key -> set of pivots whose row mentions key

    def __len__(self):
        return len(self.rows)

    def _axpy(self, row, f, other):
        p = self.field.characteristic
        for k, v in other.items():
            nv = row.get(k, 0) - f * v
            if p:
                nv %= p
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)

    def reduce(self, row):
        row = {k: v for k, v in row.items() if v}
        for k in [k for k in row if k in self.rows]:
            f = row.get(k)
            if f:
                self._axpy(row, f, self.rows[k])
        return row

    def add(self, row) -> bool:
        p = self.field.characteristic
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = self.field.inv(row[c])
        row = {k: (v * inv % p if p else v * inv) for k, v in row.items()}
        for piv in list(self._occ.get(c, ())):
            other = self.rows[piv]
            f = other.get(c)
            if not f:
                continue
            before = set(other)
            self._axpy(other, f, row)
            after = set(other)
            for k in before - after:
                self._occ.get(k, set()).discard(piv)
            for k in after - before:
                self._occ.setdefault(k, set()).add(piv)
        self.rows[c] = row
        for k in row:
            self._occ.setdefault(k, set()).add(c)
        return True

    def contains(self, row) -> bool:
        return not self.reduce(row)
