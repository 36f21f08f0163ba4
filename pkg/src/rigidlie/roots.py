"""Linear systems of roots ``x_i + x_j = x_k`` attached to a regular torus vector."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import NotDiagonalizableError, RigidLieError, StructureError
from .liealg import LieAlgebra, ad
from .linalg import (
    Matrix,
    Subspace,
    clear_denominators,
    minpoly,
    nullspace,
    rank,
    solve_in_span,
)
from .scalars import Scalar, is_squarefree, split_roots
from .weights import nilradical

DEFAULT_HEIGHT = 3


def _kernel_dim(g: LieAlgebra, x) -> int:
    return nullspace(ad(g, x)).dim


def regular_vector(g: LieAlgebra, torus, height: int = DEFAULT_HEIGHT) -> tuple:
    """Torus element minimising ``dim ker ad(X)``.

    Candidates are the torus generators themselves, then integer combinations
    with coefficients in [-height, height] ordered by total weight and
    lexicographically; the first candidate reaching the minimum wins.
    """
    torus = [g.coerce_vector(t) for t in torus]
    if not torus:
        raise StructureError("regular vector needs a nonempty torus")
    r = len(torus)
    coeff_list = [tuple(1 if t == i else 0 for t in range(r)) for i in range(r)]
    combos = [c for c in itertools.product(range(-height, height + 1), repeat=r)
              if any(c) and next(x for x in c if x) > 0 and c not in coeff_list]
    combos.sort(key=lambda c: (sum(map(abs, c)), [-x for x in c]))
    coeff_list += combos

    best, best_dim = None, None
    for c in coeff_list:
        x = tuple(sum((ci * t[k] for ci, t in zip(c, torus)), Scalar(0, 0, g.field)) for k in range(g.dim))
        if not any(x):
            continue
        d = _kernel_dim(g, x)
        if best_dim is None or d < best_dim:
            best, best_dim = x, d
    if best_dim == g.dim:
        raise RigidLieError("degenerate torus: ad(X) vanishes identically for every candidate")
    return best


@dataclass
class RootSystem:
    """Equations ``x_i + x_j = x_k`` over an eigenbasis ``Y_1..Y_{n-1}, X``.

    The first ``nil_vars`` variables belong to the nilradical eigenvectors,
    the rest to torus elements other than ``X``; ``(i, j, k)`` is 1-based.
    """

    num_vars: int
    nil_vars: int
    equations: list[tuple[int, int, int]]
    provenance: dict[tuple[int, int, int], list[str]] = field(default_factory=dict)
    eigenbasis: list[tuple] = field(default_factory=list)
    eigenvalues: list[Scalar] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def coefficient_rows(self) -> list[list[int]]:
        rows = []
        for i, j, k in self.equations:
            row = [0] * self.num_vars
            row[i - 1] += 1
            row[j - 1] += 1
            row[k - 1] -= 1
            rows.append(row)
        return rows

    def coefficient_matrix(self) -> Matrix | None:
        rows = self.coefficient_rows()
        return Matrix(rows) if rows else None

    @property
    def rank(self) -> int:
        M = self.coefficient_matrix()
        return rank(M) if M is not None else 0

    @property
    def corank(self) -> int:
        return self.num_vars - self.rank

    def nilradical_equations(self) -> list[tuple[int, int, int]]:
        return [e for e in self.equations if max(e) <= self.nil_vars]

    def nilradical_system(self) -> "RootSystem":
        eqs = self.nilradical_equations()
        return RootSystem(self.nil_vars, self.nil_vars, eqs, {e: self.provenance[e] for e in eqs},
                          self.eigenbasis[:self.nil_vars], self.eigenvalues[:self.nil_vars])

    def satisfied_by(self, values) -> bool:
        return all(values[i - 1] + values[j - 1] == values[k - 1] for i, j, k in self.equations)

    def to_json(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "nil_vars": self.nil_vars,
            "equations": [list(e) for e in self.equations],
            "provenance": {f"{i},{j},{k}": v for (i, j, k), v in self.provenance.items()},
            "eigenvalues": [str(x) for x in self.eigenvalues],
            "rank": self.rank,
            "corank": self.corank,
            "solution_basis": [list(v) for v in integer_solution_basis(self)],
            "notes": self.notes,
        }

    def table(self) -> str:
        lines = [f"{'#':>3}  equation            source"]
        for n, (i, j, k) in enumerate(self.equations, 1):
            lines.append(f"{n:>3}  x{i} + x{j} = x{k}".ljust(26) + "; ".join(self.provenance.get((i, j, k), [])))
        return "\n".join(lines)


def _check_diagonalizable(op: Matrix, field: str, label: str):
    m = minpoly(op)
    roots, cof = split_roots(m, field)
    if not is_squarefree(m) or cof.degree >= 1:
        raise NotDiagonalizableError(
            f"ad({label}) is not diagonalizable over {field} on the nilradical: minimal polynomial {m}",
            element=label, minpoly=m,
        )
    return [r for r, _ in roots]


def _split(op: Matrix, spec, pieces, zero):
    m = op.nrows
    out = []
    for piece in pieces:
        for lam in spec:
            shifted = op - Matrix.identity(m, op.field) * lam
            ns = nullspace(Matrix.from_columns([shifted @ v for v in piece]))
            if ns.dim:
                vecs = [tuple(sum((ci * v[r] for ci, v in zip(c, piece)), zero) for r in range(m))
                        for c in ns.vectors()]
                out.append(Subspace(m, vecs, op.field).vectors())
    return out


def _torus_complement(g: LieAlgebra, N: Subspace, X: tuple, torus) -> list[tuple]:
    """Vectors completing N + <X> to g: torus generators if given, else kernel vectors of ad(X)."""
    span = N + Subspace(g.dim, [X], g.field)
    if torus:
        pool = [g.coerce_vector(t) for t in torus]
    else:
        pool = nullspace(ad(g, X)).vectors() + [g.basis_vector(j) for j in range(g.dim)]
    out = []
    for v in pool:
        if span.dim == g.dim:
            break
        bigger = span + Subspace(g.dim, [v], g.field)
        if bigger.dim > span.dim:
            out.append(v)
            span = bigger
    if span.dim != g.dim:
        raise StructureError("nilradical, X and the torus do not span the algebra")
    return out


def root_system(g: LieAlgebra, X, torus=None, label: str = "X", strict: bool = True) -> RootSystem:
    """Linear system of roots at the torus vector ``X``.

    Variables: an eigenbasis of ad(X) on the nilradical (ordered by first
    nonzero coordinate), then the torus generators other than X.  Torus
    generators refine multi-dimensional eigenspaces of ad(X).  A generator
    that is not diagonalizable over the field raises, unless ``strict`` is
    False, in which case it is skipped with a note.  One equation
    ``x_i + x_j = x_k`` per nonzero coordinate of ``[Y_i, Y_j]`` on ``Y_k``.
    """
    X = g.coerce_vector(X)
    N = nilradical(g)
    nb = N.vectors()
    m = len(nb)
    zero = Scalar(0, 0, g.field)
    one = Scalar(1, 0, g.field)

    def restricted(x):
        A = ad(g, x)
        return Matrix.from_columns([N.coordinates(A @ v) for v in nb]).with_field(g.field)

    notes: list[str] = []
    eig: list[tuple] = []
    if m:
        opX = restricted(X)
        pieces = _split(opX, _check_diagonalizable(opX, g.field, label),
                        [[tuple(one if a == b else zero for a in range(m)) for b in range(m)]], zero)
        for t in torus or []:
            t = g.coerce_vector(t)
            name = g.describe_vector(t)
            op = restricted(t)
            if op.is_zero():
                continue
            try:
                spec = _check_diagonalizable(op, g.field, name)
            except NotDiagonalizableError as exc:
                if strict:
                    raise
                notes.append(f"{exc}; not used to refine eigenspaces of ad({label})")
                continue
            if any(len(p) > 1 for p in pieces):
                pieces = _split(op, spec, pieces, zero)
        for piece in pieces:
            for v in piece:
                eig.append(tuple(sum((v[b] * nb[b][r] for b in range(m)), zero) for r in range(g.dim)))
        eig.sort(key=lambda v: next(i for i, x in enumerate(v) if x))

    comp = _torus_complement(g, N, X, [t for t in (torus or [])])
    comp = [t for t in comp if not Subspace(g.dim, [X], g.field).contains(t)]
    Y = eig + comp
    full = Y + [X]

    A = ad(g, X)
    eigenvalues = []
    for v in eig:
        w = A @ v
        p = next(i for i, x in enumerate(v) if x)
        eigenvalues.append(w[p] / v[p])
    for t in comp:
        if any(A @ t):
            notes.append(f"torus element {g.describe_vector(t)} does not commute with {label}")
        eigenvalues.append(zero)

    equations: list[tuple[int, int, int]] = []
    prov: dict[tuple[int, int, int], list[str]] = {}
    for i, j in itertools.combinations(range(len(Y)), 2):
        w = g.bracket(Y[i], Y[j])
        if not any(w):
            continue
        coords = solve_in_span(full, w)
        if coords is None:  # pragma: no cover - full is a basis
            raise RigidLieError("eigenbasis does not span the algebra")
        for k, c in enumerate(coords):
            if not c:
                continue
            if k == len(Y):
                notes.append(f"[Y{i + 1},Y{j + 1}] has a component on {label}; no variable for it")
                continue
            key = (i + 1, j + 1, k + 1)
            if key not in prov:
                equations.append(key)
                prov[key] = []
            prov[key].append(f"[Y{i + 1},Y{j + 1}] has {c}*Y{k + 1}")
    return RootSystem(len(Y), m, equations, prov, Y, eigenvalues, notes)


@dataclass
class RankTest:
    rank: int
    nil_dim: int
    passed: bool

    @property
    def note(self) -> str:
        if self.passed:
            return f"rank {self.rank} = dim n - 1 = {self.nil_dim - 1}: necessary condition for rigidity holds"
        return (f"rank {self.rank} != dim n - 1 = {self.nil_dim - 1}: the necessary condition fails "
                "for this vector (rigid implies rank = dim n - 1; a PASS does not imply rigidity)")

    def to_json(self) -> dict:
        return {"rank": self.rank, "nil_dim": self.nil_dim, "expected": self.nil_dim - 1,
                "verdict": "PASS" if self.passed else "FAIL", "note": self.note}


def rank_test(S: RootSystem, nil_dim: int) -> RankTest:
    r = S.rank
    return RankTest(r, nil_dim, r == nil_dim - 1)


def integer_solution_basis(S: RootSystem) -> list[tuple[int, ...]]:
    """Coprime integer basis of the rational solution space of S."""
    if S.num_vars == 0:
        return []
    M = S.coefficient_matrix()
    if M is None:
        return [tuple(1 if i == j else 0 for i in range(S.num_vars)) for j in range(S.num_vars)]
    return [clear_denominators(v) for v in nullspace(M).vectors()]
