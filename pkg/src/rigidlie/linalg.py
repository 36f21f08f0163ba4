"""Exact dense matrices over Q and Q(i).

Rank and nullspace go through a fraction-free sparse elimination on integer
(or Gaussian integer) rows: every row is scaled to a primitive integral row
and kept primitive after each update, so nothing but integer arithmetic
happens inside the loop.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import FieldError, SingularMatrixError, StructureError
from .scalars import (
    ONE,
    Q,
    QI,
    ZERO,
    Polynomial,
    Scalar,
    as_scalar,
    join_fields,
    parse_scalar,
    poly_lcm,
)


class GaussInt:
    """Gaussian integer used only inside the elimination engine."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int):
        self.a = a
        self.b = b

    def __mul__(self, o):
        if isinstance(o, int):
            return GaussInt(self.a * o, self.b * o)
        return GaussInt(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __sub__(self, o):
        return GaussInt(self.a - o.a, self.b - o.b)

    def __floordiv__(self, k: int):
        return GaussInt(self.a // k, self.b // k)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def content(self) -> int:
        return math.gcd(self.a, self.b)

    def to_scalar(self) -> Scalar:
        return Scalar(self.a, self.b, QI)

    def __repr__(self):
        return f"GaussInt({self.a}, {self.b})"


def _content(x) -> int:
    return abs(x) if isinstance(x, int) else x.content()


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = math.gcd(g, _content(v))
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _integral_row(entries: dict, gaussian: bool) -> dict:
    """Scale a {col: Scalar} row to a primitive integral row."""
    den = 1
    for s in entries.values():
        den = math.lcm(den, s.re.denominator, s.im.denominator)
    out = {}
    for c, s in entries.items():
        if not s:
            continue
        if gaussian:
            out[c] = GaussInt(int(s.re * den), int(s.im * den))
        else:
            out[c] = int(s.re * den)
    return _primitive(out)


def _combine(p, row: dict, a, prow: dict, col: int) -> dict:
    """p*row - a*prow with the entry at ``col`` cancelled, made primitive."""
    out = {}
    for c, v in row.items():
        if c != col:
            out[c] = v * p
    for c, v in prow.items():
        if c == col:
            continue
        w = out.get(c)
        nv = (w - v * a) if w is not None else (v * (-1)) * a
        if nv:
            out[c] = nv
        elif w is not None:
            del out[c]
    return _primitive(out)


def eliminate(rows: list[dict], ncols: int, reduced: bool = False):
    """Fraction-free echelon form of integral sparse rows.

    Pivot choice is deterministic: columns are scanned left to right and the
    first remaining row (in input order) with a nonzero entry is used.
    With ``reduced`` the pivot column is also cleared from earlier pivot rows.
    Returns a list of ``(pivot_col, row)``.
    """
    remaining = [r for r in rows if r]
    pivots: list[tuple[int, dict]] = []
    cols = sorted({c for r in remaining for c in r})
    for col in cols:
        if not remaining:
            break
        idx = next((t for t, r in enumerate(remaining) if col in r), None)
        if idx is None:
            continue
        prow = remaining.pop(idx)
        p = prow[col]
        nxt = []
        for r in remaining:
            a = r.get(col)
            if a is not None:
                r = _combine(p, r, a, prow, col)
            if r:
                nxt.append(r)
        remaining = nxt
        if reduced:
            pivots = [
                (pc, _combine(p, r, r[col], prow, col) if col in r else r)
                for pc, r in pivots
            ]
        pivots.append((col, prow))
    return pivots


def _ratio(num, den) -> Scalar:
    if isinstance(den, int):
        if isinstance(num, int):
            return Scalar(Fraction(num, den))
        return Scalar(Fraction(num.a, den), Fraction(num.b, den), QI)
    if isinstance(num, int):
        num = GaussInt(num, 0)
    n = den.a * den.a + den.b * den.b
    re = num.a * den.a + num.b * den.b
    im = num.b * den.a - num.a * den.b
    return Scalar(Fraction(re, n), Fraction(im, n), QI)


class Matrix:
    """Immutable dense matrix of :class:`Scalar` entries."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows: Iterable[Iterable], field: str | None = None):
        data = tuple(tuple(Scalar.coerce(x) for x in r) for r in rows)
        if not data or not data[0]:
            raise StructureError("matrix dimensions must be positive")
        ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise StructureError("ragged matrix rows")
        fld = join_fields(*(x.field for r in data for x in r))
        if field is not None and field != fld:
            data = tuple(tuple(x.in_field(field) for x in r) for r in data)
            fld = field
        elif fld == QI:
            data = tuple(tuple(x.in_field(QI) for x in r) for r in data)
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "field", fld)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def identity(cls, n: int, field: str = Q) -> "Matrix":
        return cls(((ONE if i == j else ZERO) for j in range(n)) for i in range(n)).with_field(field)

    @classmethod
    def zeros(cls, r: int, c: int, field: str = Q) -> "Matrix":
        return cls([[ZERO] * c for _ in range(r)]).with_field(field)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        cols = [list(c) for c in cols]
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    def with_field(self, field: str) -> "Matrix":
        if field == self.field:
            return self
        return Matrix(self.rows, field=field)

    # -- access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def is_upper_triangular(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.nrows) for j in range(min(i, self.ncols)))

    def diagonal(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    def trace(self) -> Scalar:
        return sum(self.diagonal(), ZERO)

    # -- arithmetic -------------------------------------------------------
    def _check_same(self, other):
        if self.shape != other.shape:
            raise StructureError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix((a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix((a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))

    def __neg__(self):
        return Matrix((-a for a in r) for r in self.rows)

    def __mul__(self, c) -> "Matrix":
        c = Scalar.coerce(c)
        return Matrix((a * c for a in r) for r in self.rows)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise StructureError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return Matrix([_dot(r, c) for c in cols] for r in self.rows)
        vec = tuple(Scalar.coerce(x) for x in other)
        if len(vec) != self.ncols:
            raise StructureError("vector length does not match matrix")
        return tuple(_dot(r, vec) for r in self.rows)

    def __pow__(self, k: int) -> "Matrix":
        out = Matrix.identity(self.nrows, self.field)
        for _ in range(k):
            out = out @ self
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise StructureError("only square matrices can be inverted")
        n = self.nrows
        aug = Matrix(list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows))
        red = rref_rows(aug)
        pivots = [p for p, _ in red]
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            _, ns = rank_and_nullspace(self)
            raise SingularMatrixError(
                "matrix is singular", witness=ns.vectors()[0] if ns.dim else None
            )
        return Matrix(r[n:] for _, r in red[:n])

    def complexify(self) -> "Matrix":
        return self.with_field(QI)

    # -- text / json ------------------------------------------------------
    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data, field: str | None = None) -> "Matrix":
        try:
            return cls([[parse_scalar(str(x)) for x in r] for r in data], field=field)
        except (TypeError, IndexError) as exc:
            raise StructureError(f"bad matrix json: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)

    def __repr__(self):
        return f"Matrix({self.to_json()!r})"


def _dot(a, b) -> Scalar:
    acc = ZERO
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def vector(values: Iterable, field: str | None = None) -> tuple:
    return tuple(as_scalar(v, field) for v in values)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


# ---------------------------------------------------------------------------
# elimination front ends
# ---------------------------------------------------------------------------


def _sparse_rows(M) -> tuple[list[dict], int, bool]:
    if isinstance(M, Matrix):
        rows = [{j: x for j, x in enumerate(r) if x} for r in M.rows]
        return rows, M.ncols, M.field == QI
    raise TypeError("expected a Matrix")


def rank_of_rows(rows: list[dict], ncols: int, gaussian: bool | None = None) -> int:
    """Rank of sparse rows ``{col: Scalar}``; used for the large cohomology matrices."""
    if gaussian is None:
        gaussian = any(s.field == QI for r in rows for s in r.values())
    integral = [_integral_row(r, gaussian) for r in rows]
    return len(eliminate(integral, ncols))


def rank(M: Matrix) -> int:
    rows, ncols, g = _sparse_rows(M)
    return rank_of_rows(rows, ncols, g)


def rref_rows(M: Matrix) -> list[tuple[int, tuple]]:
    """Reduced row echelon form as ``(pivot_col, row_of_Scalars)`` pairs."""
    rows, ncols, g = _sparse_rows(M)
    integral = [_integral_row(r, g) for r in rows]
    out = []
    zero = Scalar(0, 0, M.field)
    for col, r in eliminate(integral, ncols, reduced=True):
        p = r[col]
        dense = [zero] * ncols
        for c, v in r.items():
            dense[c] = _ratio(v, p).in_field(M.field) if g else _ratio(v, p)
        out.append((col, tuple(dense)))
    return out


def rref(M: Matrix) -> tuple[Matrix | None, list[int]]:
    red = rref_rows(M)
    if not red:
        return None, []
    return Matrix([r for _, r in red]), [p for p, _ in red]


class Subspace:
    """Subspace of F^n kept as a reduced row echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots", "field")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = (), field: str = Q):
        vecs = [tuple(Scalar.coerce(x) for x in v) for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise StructureError("vector length does not match ambient dimension")
        fld = join_fields(field, *(x.field for v in vecs for x in v))
        self.ambient_dim = ambient_dim
        self.field = fld
        if vecs:
            red = rref_rows(Matrix(vecs, field=fld))
        else:
            red = []
        self.pivots = [p for p, _ in red]
        self.basis = Matrix([r for _, r in red]) if red else None

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> list[tuple]:
        return list(self.basis.rows) if self.basis is not None else []

    def __len__(self):
        return self.dim

    def contains(self, v: Sequence) -> bool:
        return Subspace(self.ambient_dim, self.vectors() + [tuple(v)], self.field).dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return (self + other).dim == self.dim

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the echelon basis (``v`` must lie in the span)."""
        v = tuple(Scalar.coerce(x) for x in v)
        coords = tuple(v[p] / self.basis[k, p] for k, p in enumerate(self.pivots))
        recon = tuple(sum((c * self.basis[k, j] for k, c in enumerate(coords)), ZERO) for j in range(self.ambient_dim))
        if recon != v:
            raise StructureError("vector is not in the subspace")
        return coords

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient_dim, self.vectors() + other.vectors(), join_fields(self.field, other.field))

    def intersect(self, other: "Subspace") -> "Subspace":
        a, b = self.vectors(), other.vectors()
        if not a or not b:
            return Subspace(self.ambient_dim, (), self.field)
        # x = sum a_i u_i = sum b_j w_j  <=>  [A^T | -B^T] (alpha, beta) = 0
        M = Matrix.from_columns(a + [tuple(-x for x in w) for w in b])
        _, ns = rank_and_nullspace(M)
        out = []
        for sol in ns.vectors():
            out.append(tuple(sum((sol[i] * a[i][j] for i in range(len(a))), ZERO) for j in range(self.ambient_dim)))
        return Subspace(self.ambient_dim, out, join_fields(self.field, other.field))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.vectors() == other.vectors()

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"


def rank_and_nullspace(M: Matrix) -> tuple[int, Subspace]:
    """Rank of ``M`` and its right nullspace ``{v : M v = 0}``."""
    red = rref_rows(M)
    pivots = [p for p, _ in red]
    free = [c for c in range(M.ncols) if c not in set(pivots)]
    one = Scalar(1, 0, M.field)
    zero = Scalar(0, 0, M.field)
    vecs = []
    for f in free:
        v = [zero] * M.ncols
        v[f] = one
        for p, r in red:
            v[p] = -r[f]
        vecs.append(v)
    return len(pivots), Subspace(M.ncols, vecs, M.field)


def nullspace(M: Matrix) -> Subspace:
    return rank_and_nullspace(M)[1]


def extend_to_basis(vectors: Sequence[Sequence], n: int, field: str = Q) -> list[tuple]:
    """Append standard basis vectors (lowest index first) to reach a basis."""
    out = [tuple(v) for v in vectors]
    span = Subspace(n, out, field)
    for j in range(n):
        if span.dim == n:
            break
        e = tuple(Scalar(1 if i == j else 0, 0, field) for i in range(n))
        bigger = span + Subspace(n, [e], field)
        if bigger.dim > span.dim:
            out.append(e)
            span = bigger
    return out


# ---------------------------------------------------------------------------
# polynomials of matrices
# ---------------------------------------------------------------------------


def charpoly(M: Matrix) -> Polynomial:
    """Characteristic polynomial det(T - M) by Faddeev-LeVerrier."""
    if not M.is_square():
        raise StructureError("characteristic polynomial needs a square matrix")
    n = M.nrows
    ident = Matrix.identity(n, M.field)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    Mk = Matrix.zeros(n, n, M.field)
    for k in range(1, n + 1):
        Mk = M @ Mk + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(M @ Mk).trace() / k
    return Polynomial(coeffs)


def poly_at(p: Polynomial, M: Matrix) -> Matrix:
    """Evaluate ``p`` at a square matrix by Horner's rule."""
    n = M.nrows
    acc = Matrix.zeros(n, n, join_fields(M.field, p.field))
    ident = Matrix.identity(n, acc.field)
    for c in reversed(p.coeffs):
        acc = acc @ M + ident * c
    return acc


def _local_minpoly(M: Matrix, v: tuple) -> Polynomial:
    krylov = [v]
    while True:
        nxt = M @ krylov[-1]
        A = Matrix.from_columns(krylov + [nxt])
        _, ns = rank_and_nullspace(A)
        if ns.dim:
            sol = ns.vectors()[0]
            return Polynomial(sol).monic()
        krylov.append(nxt)


def minpoly(M: Matrix) -> Polynomial:
    """Minimal polynomial: lcm of the annihilators of the standard basis vectors."""
    if not M.is_square():
        raise StructureError("minimal polynomial needs a square matrix")
    n = M.nrows
    m = Polynomial([1])
    for j in range(n):
        e = tuple(Scalar(1 if i == j else 0, 0, M.field) for i in range(n))
        m = poly_lcm(m, _local_minpoly(M, e))
    return m


def eigenvalues(M: Matrix, field: str | None = None, element: str | None = None) -> list:
    """Eigenvalues with multiplicity as a sorted flat list; raises if not split."""
    from .scalars import roots_in_field

    out = []
    for r, mult in roots_in_field(charpoly(M), field or M.field, element=element):
        out.extend([r] * mult)
    return out


def eigenspace(M: Matrix, lam) -> Subspace:
    lam = Scalar.coerce(lam)
    n = M.nrows
    return nullspace(M - Matrix.identity(n, join_fields(M.field, lam.field)) * lam)


def solve_in_span(columns: Sequence[Sequence], target: Sequence) -> tuple | None:
    """Coefficients c with sum c_k columns[k] = target, or None."""
    A = Matrix.from_columns(list(columns) + [tuple(-x for x in target)])
    _, ns = rank_and_nullspace(A)
    for v in ns.vectors():
        if v[-1]:
            return tuple(x / v[-1] for x in v[:-1])
    return None


def clear_denominators(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, keeping its orientation."""
    vals = [Scalar.coerce(x) for x in v]
    if any(x.im for x in vals):
        raise FieldError("only rational vectors can be cleared to integers")
    den = reduce(math.lcm, (x.re.denominator for x in vals), 1)
    ints = [int(x.re * den) for x in vals]
    g = reduce(math.gcd, ints, 0) or 1
    return tuple(i // g for i in ints)
