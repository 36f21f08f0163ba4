"""Constructive Lie's theorem for solvable algebras.

:func:`triangularize` builds a full flag of ideals one common eigenvector at
a time.  The common eigenvector in each quotient is found by intersecting
eigenspaces of the induced ``ad(e_1), ad(e_2), ...`` in that order,
backtracking over eigenvalues when an intersection becomes zero.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldError, NotSplitError, NotSolvableError, RigidLieError
from .liealg import (
    LieAlgebra,
    ad,
    ad_basis,
    bracket_spaces,
    complexify,
    is_ideal,
    is_solvable,
    series_terms,
    subalgebra,
    whole,
)
from .linalg import Matrix, Subspace, charpoly, extend_to_basis, minpoly, nullspace
from .scalars import Q, QI, Scalar, roots_in_field


@dataclass
class WeightSystem:
    algebra: LieAlgebra
    flag_basis: Matrix
    weights: list[tuple[Scalar, ...]]  # weights[j][i] = lambda_j(e_i)

    def weight_of(self, j: int, x) -> Scalar:
        return sum((c * w for c, w in zip(x, self.weights[j])), Scalar(0, 0, self.algebra.field))

    def diagonal(self, x) -> tuple:
        return tuple(self.weight_of(j, x) for j in range(len(self.weights)))

    def to_json(self) -> dict:
        return {
            "flag_basis": self.flag_basis.to_json(),
            "weights": [[str(c) for c in w] for w in self.weights],
            "basis": list(self.algebra.basis_names),
        }


def _block(M: Matrix, k: int) -> Matrix:
    return Matrix(r[k:] for r in M.rows[k:])


def _restricted_kernel(op: Matrix, lam: Scalar, K: list[tuple]) -> list[tuple]:
    """Basis of ``K ∩ ker(op - lam)`` with K given by spanning vectors."""
    if not K:
        return []
    imgs = []
    for v in K:
        w = op @ v
        imgs.append(tuple(a - lam * b for a, b in zip(w, v)))
    ns = nullspace(Matrix.from_columns(imgs))
    out = []
    for c in ns.vectors():
        out.append(tuple(sum((ci * v[t] for ci, v in zip(c, K)), Scalar(0, 0, op.field)) for t in range(len(K[0]))))
    return out


def _common_eigenvector(ops: list[Matrix], spectra: list[list[Scalar]]):
    m = ops[0].nrows
    field = ops[0].field
    start = [tuple(Scalar(1 if i == j else 0, 0, field) for i in range(m)) for j in range(m)]

    def dfs(level, K, lams):
        if level == len(ops):
            return K[0], lams
        op = ops[level]
        if op.is_zero():
            return dfs(level + 1, K, lams + [Scalar(0, 0, field)])
        for lam in spectra[level]:
            K2 = _restricted_kernel(op, lam, K)
            if K2:
                res = dfs(level + 1, K2, lams + [lam])
                if res is not None:
                    return res
        return None

    return dfs(0, start, [])


def triangularize(g: LieAlgebra) -> WeightSystem:
    """Flag basis in which every ``ad(e_i)`` is upper triangular, plus weights."""
    if not is_solvable(g):
        raise NotSolvableError("Lie's theorem requires solvability")
    n, field = g.dim, g.field
    A = ad_basis(g)
    for i, Ai in enumerate(A):
        roots_in_field(charpoly(Ai), field, element=g.basis_names[i])

    flag: list[tuple] = []
    weights: list[tuple] = []
    while len(flag) < n:
        k = len(flag)
        B = Matrix.from_columns(extend_to_basis(flag, n, field)).with_field(field)
        Binv = B.inverse()
        induced = [_block(Binv @ Ai @ B, k) for Ai in A]
        spectra = []
        for i, op in enumerate(induced):
            if op.is_zero():
                spectra.append([])
                continue
            spectra.append([r for r, _ in roots_in_field(charpoly(op), field, element=g.basis_names[i])])
        found = _common_eigenvector(induced, spectra)
        if found is None:  # pragma: no cover - excluded by Lie's theorem
            raise RigidLieError("no common eigenvector found in a solvable algebra")
        u, lams = found
        tail = B.columns()[k:]
        v = tuple(sum((u[t] * tail[t][r] for t in range(len(u))), Scalar(0, 0, field)) for r in range(n))
        flag.append(v)
        weights.append(tuple(lams))
    return WeightSystem(g, Matrix.from_columns(flag).with_field(field), weights)


def weights_split(g: LieAlgebra) -> WeightSystem:
    """Triangularize over g's field, falling back to Q(i) for real algebras."""
    try:
        return triangularize(g)
    except NotSplitError:
        if g.field == QI:
            raise
        return triangularize(complexify(g))


def nilradical(g: LieAlgebra) -> Subspace:
    """Common kernel of all weights, i.e. the ad-nilpotent elements."""
    ws = weights_split(g)
    rows = []
    for w in ws.weights:
        if g.field == Q:
            rows.append([c.re for c in w])
            rows.append([c.im for c in w])
        else:
            rows.append(list(w))
    N = nullspace(Matrix(rows, field=g.field))
    # sanity: an ideal, nilpotent, containing [g, g]
    G = whole(g)
    if not is_ideal(g, N) or not N.contains_subspace(bracket_spaces(g, G, G)):
        raise RigidLieError("weight kernel is not an ideal containing [g, g]")
    if N.dim and series_terms(subalgebra(g, N), "lower_central")[-1].dim != 0:
        raise RigidLieError("weight kernel is not nilpotent")
    return N


@dataclass
class SolvabilityReport:
    completely_solvable: bool
    witness: tuple | None = None
    witness_label: str | None = None
    witness_minpoly: object = None
    witness_eigenvalues: list | None = None

    def to_json(self) -> dict:
        return {
            "completely_solvable": self.completely_solvable,
            "witness": None if self.witness is None else [str(c) for c in self.witness],
            "witness_label": self.witness_label,
            "witness_minpoly": None if self.witness_minpoly is None else str(self.witness_minpoly),
            "witness_eigenvalues": None if self.witness_eigenvalues is None else [str(c) for c in self.witness_eigenvalues],
        }


def is_completely_solvable(g: LieAlgebra) -> SolvabilityReport:
    """Do all ``ad(x)`` have rational eigenvalues?

    Checked on the weights of the complexification: eigenvalues of ad(x) are
    exactly the weight values at x, so the basis suffices.  A failing basis
    element is returned as witness.
    """
    if g.field != Q:
        raise FieldError("complete solvability is tested for algebras over Q")
    if not is_solvable(g):
        raise NotSolvableError("Lie's theorem requires solvability")
    ws = triangularize(complexify(g))
    for i in range(g.dim):
        vals = [w[i] for w in ws.weights]
        if any(v.im for v in vals):
            x = g.basis_vector(i)
            return SolvabilityReport(
                False, x, g.basis_names[i], minpoly(ad(g, x)), sorted(vals, key=Scalar.sort_key)
            )
    return SolvabilityReport(True)
