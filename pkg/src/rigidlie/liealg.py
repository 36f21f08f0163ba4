"""Lie algebras given by structure constants.

Bracket tables are 1-based, as in printed tables: ``[X_i, X_j] = sum c_k X_k``.
Coefficient vectors passed to :func:`ad`, :meth:`LieAlgebra.bracket` etc. are
plain Python sequences indexed from 0.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import FieldError, SingularMatrixError, StructureError
from .linalg import Matrix, Subspace, nullspace
from .scalars import Q, QI, ZERO, Scalar, as_scalar, join_fields, parse_scalar

SCHEMA_VERSION = 1


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q or Q(i).

    Only brackets ``[e_i, e_j]`` with ``i < j`` are stored; equality compares
    the canonical tables (not isomorphism classes).
    """

    def __init__(self, dim: int, table: Mapping, field: str = Q, name: str | None = None,
                 basis_names: Sequence[str] | None = None):
        if dim < 1:
            raise StructureError("dimension must be positive")
        if field not in (Q, QI):
            raise FieldError(f"unknown field {field!r}")
        self.dim = dim
        self.field = field
        self.name = name
        self.basis_names = tuple(basis_names) if basis_names else tuple(f"X{i}" for i in range(1, dim + 1))
        if len(self.basis_names) != dim:
            raise StructureError("basis_names has the wrong length")

        canon: dict[tuple[int, int], dict[int, Scalar]] = {}
        for (i, j), terms in table.items():
            for idx in (i, j):
                if not 1 <= idx <= dim:
                    raise StructureError(f"bracket index {idx} out of range 1..{dim}")
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                if not 1 <= k <= dim:
                    raise StructureError(f"bracket target index {k} out of range 1..{dim}")
                c = as_scalar(c)
                if c.field == QI and field == Q and c.im:
                    raise FieldError(f"non-rational structure constant {c} in a Q-algebra")
                if i == j:
                    if c:
                        raise StructureError(f"[X{i},X{i}] must vanish")
                    continue
                key, sgn = ((i, j), 1) if i < j else ((j, i), -1)
                row = canon.setdefault(key, {})
                row[k] = row.get(k, ZERO) + c * sgn
        self.table: dict[tuple[int, int], tuple[tuple[int, Scalar], ...]] = {}
        for key in sorted(canon):
            terms = tuple((k, v.in_field(field)) for k, v in sorted(canon[key].items()) if v)
            if terms:
                self.table[key] = terms
        # 0-based dense lookup for both orders
        self._c: dict[tuple[int, int], tuple[tuple[int, Scalar], ...]] = {}
        for (i, j), terms in self.table.items():
            self._c[(i - 1, j - 1)] = tuple((k - 1, v) for k, v in terms)
            self._c[(j - 1, i - 1)] = tuple((k - 1, -v) for k, v in terms)

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_brackets(cls, dim: int, brackets: Iterable, field: str = Q, name: str | None = None,
                      basis_names=None) -> "LieAlgebra":
        """Build from ``(i, j, {k: coeff})`` triples; repeated pairs add up."""
        table: dict[tuple[int, int], list] = {}
        for i, j, terms in brackets:
            items = terms.items() if isinstance(terms, Mapping) else terms
            table.setdefault((i, j), []).extend(items)
        return cls(dim, table, field=field, name=name, basis_names=basis_names)

    @classmethod
    def abelian(cls, dim: int, field: str = Q) -> "LieAlgebra":
        return cls(dim, {}, field=field, name=f"abelian{dim}")

    # -- basic access -------------------------------------------------------
    def structure_constant(self, i: int, j: int, k: int) -> Scalar:
        """c_{ij}^k with 0-based indices."""
        for kk, v in self._c.get((i, j), ()):
            if kk == k:
                return v
        return Scalar(0, 0, self.field)

    def bracket_basis(self, i: int, j: int) -> tuple[tuple[int, Scalar], ...]:
        """Sparse ``[e_i, e_j]`` (0-based) as ``((k, coeff), ...)``."""
        return self._c.get((i, j), ())

    def zero_vector(self) -> tuple:
        z = Scalar(0, 0, self.field)
        return (z,) * self.dim

    def basis_vector(self, i: int) -> tuple:
        z, one = Scalar(0, 0, self.field), Scalar(1, 0, self.field)
        return tuple(one if t == i else z for t in range(self.dim))

    def coerce_vector(self, x: Sequence) -> tuple:
        if len(x) != self.dim:
            raise StructureError(f"expected {self.dim} coefficients, got {len(x)}")
        out = tuple(as_scalar(c) for c in x)
        if self.field == Q and any(c.im for c in out):
            raise FieldError("complex coefficients for an algebra over Q")
        return tuple(c.in_field(join_fields(self.field, c.field)) for c in out)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        x = self.coerce_vector(x)
        y = self.coerce_vector(y)
        out = list(self.zero_vector())
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b or i == j:
                    continue
                for k, c in self._c.get((i, j), ()):
                    out[k] = out[k] + a * b * c
        return tuple(out)

    def element(self, label: str) -> tuple:
        """Basis vector for a label such as ``"X8"``."""
        try:
            return self.basis_vector(self.basis_names.index(label))
        except ValueError:
            raise StructureError(f"unknown basis element {label!r}; have {', '.join(self.basis_names)}") from None

    def describe_vector(self, v: Sequence) -> str:
        parts = []
        for name, c in zip(self.basis_names, v):
            if not c:
                continue
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                cs = str(c)
                parts.append(f"({cs})*{name}" if (c.re and c.im) else f"{cs}*{name}")
        return "+".join(parts).replace("+-", "-") or "0"

    # -- equality -------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.field == other.field and self.table == other.table

    def same_table(self, other: "LieAlgebra") -> bool:
        """Table equality ignoring the field tag."""
        return self.dim == other.dim and self.table == other.table

    def __repr__(self):
        return f"LieAlgebra(name={self.name!r}, dim={self.dim}, field={self.field!r}, brackets={len(self.table)})"

    def pretty(self) -> str:
        lines = []
        for (i, j), terms in self.table.items():
            rhs = self.describe_vector([dict(terms).get(k, 0) for k in range(1, self.dim + 1)])
            lines.append(f"[{self.basis_names[i - 1]},{self.basis_names[j - 1]}] = {rhs}")
        return "\n".join(lines) if lines else "(abelian)"

    # -- json -------------------------------------------------------------------
    def to_json(self) -> dict:
        data = {
            "name": self.name or "",
            "dim": self.dim,
            "field": self.field,
            "brackets": [[i, j, [[str(c), k] for k, c in terms]] for (i, j), terms in self.table.items()],
        }
        if self.basis_names != tuple(f"X{i}" for i in range(1, self.dim + 1)):
            data["basis"] = list(self.basis_names)
        return data

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, separators=(", ", ": "))

    @classmethod
    def from_json(cls, data: Mapping) -> "LieAlgebra":
        try:
            dim = int(data["dim"])
            fld = data.get("field", Q)
            brackets = []
            for entry in data["brackets"]:
                i, j, terms = entry
                brackets.append((int(i), int(j), [(int(k), parse_scalar(str(c))) for c, k in terms]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, StructureError):
                raise
            raise StructureError(f"malformed algebra json: {exc!r}") from exc
        return cls.from_brackets(dim, brackets, field=fld, name=data.get("name") or None,
                                 basis_names=data.get("basis"))

    @classmethod
    def loads(cls, text: str) -> "LieAlgebra":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise StructureError(f"unparseable JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
        return cls.from_json(data)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def validate(g: LieAlgebra) -> list[tuple[tuple[int, int, int], tuple]]:
    """Jacobi defects ``((i, j, k), J(e_i, e_j, e_k))`` for 1-based i<j<k.

    An empty list means ``g`` is a Lie algebra.
    """
    defects = []
    e = [g.basis_vector(i) for i in range(g.dim)]
    br = {}

    def b(i, j):
        if (i, j) not in br:
            br[(i, j)] = g.bracket(e[i], e[j])
        return br[(i, j)]

    for i, j, k in itertools.combinations(range(g.dim), 3):
        t1 = g.bracket(e[i], b(j, k))
        t2 = g.bracket(e[j], b(k, i))
        t3 = g.bracket(e[k], b(i, j))
        J = tuple(x + y + z for x, y, z in zip(t1, t2, t3))
        if any(J):
            defects.append(((i + 1, j + 1, k + 1), J))
    return defects


def ad(g: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of ``ad(x)``: column j holds ``[x, e_j]``."""
    x = g.coerce_vector(x)
    cols = [g.bracket(x, g.basis_vector(j)) for j in range(g.dim)]
    return Matrix.from_columns(cols).with_field(g.field)


def ad_basis(g: LieAlgebra) -> list[Matrix]:
    return [ad(g, g.basis_vector(i)) for i in range(g.dim)]


def bracket_spaces(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vecs = [g.bracket(u, v) for u in a.vectors() for v in b.vectors()]
    return Subspace(g.dim, vecs, g.field)


def whole(g: LieAlgebra) -> Subspace:
    return Subspace(g.dim, [g.basis_vector(i) for i in range(g.dim)], g.field)


def center(g: LieAlgebra) -> Subspace:
    """``{x : [x, y] = 0 for all y}``."""
    rows = []
    for j in range(g.dim):
        # [x, e_j] = -ad(e_j) x; stack the rows of ad(e_j)
        rows.extend(ad(g, g.basis_vector(j)).rows)
    return nullspace(Matrix(rows, field=g.field))


@dataclass
class SeriesReport:
    kind: str
    dims: list[int]
    verdict: str
    length: int | None = None

    def to_json(self) -> dict:
        return {"kind": self.kind, "dims": self.dims, "verdict": self.verdict, "length": self.length}

    def __str__(self):
        tail = f"({self.length})" if self.length is not None else ""
        return f"{self.kind}: dims {tuple(self.dims)}; {self.verdict}{tail}"


def series_terms(g: LieAlgebra, kind: str) -> list[Subspace]:
    if kind not in ("lower_central", "derived"):
        raise ValueError(f"unknown series kind {kind!r}")
    W = whole(g)
    terms = [W]
    while True:
        cur = terms[-1]
        nxt = bracket_spaces(g, W if kind == "lower_central" else cur, cur)
        if nxt.dim == cur.dim:
            return terms
        terms.append(nxt)
        if nxt.dim == 0:
            return terms


def series(g: LieAlgebra, kind: str) -> SeriesReport:
    """Lower central or derived series, iterated until it stabilises."""
    terms = series_terms(g, kind)
    dims = [t.dim for t in terms]
    if dims[-1] == 0:
        verdict = "nilpotent" if kind == "lower_central" else "solvable"
        return SeriesReport(kind, dims, verdict, len(dims) - 1)
    return SeriesReport(kind, dims, "not nilpotent" if kind == "lower_central" else "not solvable")


def is_nilpotent(g: LieAlgebra) -> bool:
    return series(g, "lower_central").dims[-1] == 0


def is_solvable(g: LieAlgebra) -> bool:
    return series(g, "derived").dims[-1] == 0


def complexify(g: LieAlgebra) -> LieAlgebra:
    """Same structure constants read over Q(i)."""
    if g.field == QI:
        raise FieldError("already complex")
    return LieAlgebra(g.dim, {k: dict(v) for k, v in g.table.items()}, field=QI,
                      name=f"{g.name}⊗C" if g.name else None, basis_names=g.basis_names)


def base_change(g: LieAlgebra, P: Matrix, name: str | None = None) -> LieAlgebra:
    """Law in the basis given by the columns of ``P``: ``P^-1 [P x, P y]``."""
    if P.shape != (g.dim, g.dim):
        raise StructureError(f"base change must be {g.dim}x{g.dim}")
    field = join_fields(g.field, P.field)
    try:
        Pinv = P.inverse()
    except SingularMatrixError as exc:
        raise SingularMatrixError(f"singular base change; kernel witness {list(map(str, exc.witness))}",
                                  witness=exc.witness) from None
    src = g if field == g.field else complexify(g)
    cols = P.columns()
    table = {}
    for i, j in itertools.combinations(range(g.dim), 2):
        w = Pinv @ src.bracket(cols[i], cols[j])
        terms = {k + 1: c for k, c in enumerate(w) if c}
        if terms:
            table[(i + 1, j + 1)] = terms
    return LieAlgebra(g.dim, table, field=field, name=name or g.name, basis_names=None)


def subalgebra(g: LieAlgebra, S: Subspace, name: str | None = None) -> LieAlgebra:
    """Restriction of the bracket to a subalgebra, in the echelon basis of ``S``."""
    vecs = S.vectors()
    table = {}
    for a, b in itertools.combinations(range(len(vecs)), 2):
        w = g.bracket(vecs[a], vecs[b])
        coords = S.coordinates(w)
        terms = {k + 1: c for k, c in enumerate(coords) if c}
        if terms:
            table[(a + 1, b + 1)] = terms
    names = None
    if all(sum(1 for x in v if x) == 1 and v[S.pivots[t]] == 1 for t, v in enumerate(vecs)):
        names = [g.basis_names[p] for p in S.pivots]
    return LieAlgebra(len(vecs), table, field=g.field, name=name, basis_names=names)


def is_ideal(g: LieAlgebra, S: Subspace) -> bool:
    return S.contains_subspace(bracket_spaces(g, whole(g), S))


def complement_basis(g: LieAlgebra, S: Subspace) -> list[tuple]:
    """Standard basis vectors completing ``S`` to ``g``, taken from the highest index down."""
    span = S
    out = []
    for j in reversed(range(g.dim)):
        e = g.basis_vector(j)
        if not span.contains(e):
            out.append(e)
            span = span + Subspace(g.dim, [e], g.field)
    return list(reversed(out))
