"""Derivation algebras, semisimplicity classes and bounded torus search."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import StructureError
from .liealg import LieAlgebra
from .linalg import Matrix, Subspace, commutator, minpoly, nullspace
from .scalars import Q, ZERO, Scalar, is_squarefree, sturm_real_root_count

R_DIAGONALIZABLE = "R_diagonalizable"
C_DIAGONALIZABLE_ONLY = "C_diagonalizable_only"
NOT_SEMISIMPLE = "not_semisimple"

DEFAULT_HEIGHT = 3


@dataclass
class DerivationBasis:
    algebra: LieAlgebra
    basis: list[Matrix]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _leibniz_rows(g: LieAlgebra) -> list[dict]:
    """Rows of D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0 in the n^2 unknowns D[a][b]."""
    n = g.dim
    var = lambda a, b: a * n + b  # noqa: E731
    rows = []
    for i, j in itertools.combinations(range(n), 2):
        per_s: dict[int, dict[int, Scalar]] = {s: {} for s in range(n)}

        def add(s, v, c):
            row = per_s[s]
            row[v] = row.get(v, ZERO) + c

        for m, c in g.bracket_basis(i, j):  # D[e_i,e_j]_s = sum_m c^m D[s][m]
            for s in range(n):
                add(s, var(s, m), c)
        for a in range(n):  # [D e_i, e_j]_s = sum_a D[a][i] c_{aj}^s
            for s, c in g.bracket_basis(a, j):
                add(s, var(a, i), -c)
            for s, c in g.bracket_basis(i, a):  # [e_i, D e_j]_s = sum_a D[a][j] c_{ia}^s
                add(s, var(a, j), -c)
        for s in range(n):
            r = {v: c for v, c in per_s[s].items() if c}
            if r:
                rows.append(r)
    return rows


def derivation_algebra(g: LieAlgebra) -> DerivationBasis:
    """Basis of Der(g): nullspace of the Leibniz system."""
    n = g.dim
    rows = _leibniz_rows(g)
    if rows:
        M = Matrix([[r.get(v, 0) for v in range(n * n)] for r in rows], field=g.field)
        ns = nullspace(M).vectors()
    else:
        ns = [tuple(Scalar(1 if t == v else 0, 0, g.field) for t in range(n * n)) for v in range(n * n)]
    basis = [Matrix([vec[a * n:(a + 1) * n] for a in range(n)]) for vec in ns]
    return DerivationBasis(g, basis)


def is_derivation(g: LieAlgebra, M: Matrix) -> list[tuple[tuple[int, int], tuple]]:
    """Nonzero Leibniz defects ``((i, j), D[e_i,e_j] - [De_i,e_j] - [e_i,De_j])``."""
    if M.shape != (g.dim, g.dim):
        raise StructureError(f"derivation must be {g.dim}x{g.dim}")
    cols = M.columns()
    out = []
    for i, j in itertools.combinations(range(g.dim), 2):
        lhs = M @ g.bracket(g.basis_vector(i), g.basis_vector(j))
        r1 = g.bracket(cols[i], g.basis_vector(j))
        r2 = g.bracket(g.basis_vector(i), cols[j])
        d = tuple(a - b - c for a, b, c in zip(lhs, r1, r2))
        if any(d):
            out.append(((i + 1, j + 1), d))
    return out


def semisimplicity_class(M: Matrix) -> str:
    """Classify a rational matrix via its minimal polynomial.

    Squarefree with only real roots means diagonalizable over R; squarefree
    with some non-real roots means only over C.
    """
    m = minpoly(M.with_field(Q))
    if not is_squarefree(m):
        return NOT_SEMISIMPLE
    if sturm_real_root_count(m) == m.degree:
        return R_DIAGONALIZABLE
    return C_DIAGONALIZABLE_ONLY


def is_nilpotent_matrix(M: Matrix) -> bool:
    m = minpoly(M)
    return all(not c for c in m.coeffs[:-1])


@dataclass
class TorusReport:
    generators: list[Matrix]
    classification: list[str]
    height: int
    coefficients: list[tuple[int, ...]] = field(default_factory=list)
    candidates_tried: int = 0

    @property
    def rank_over_R(self) -> int:
        return len(self.generators)

    @property
    def banner(self) -> str:
        return f"heuristic, height={self.height}: rank found within the search grid, global maximality not asserted"

    def to_json(self) -> dict:
        return {
            "rank_over_R": self.rank_over_R,
            "height": self.height,
            "heuristic": True,
            "banner": self.banner,
            "generators": [m.to_json() for m in self.generators],
            "classification": self.classification,
            "coefficients": [list(c) for c in self.coefficients],
        }


def _combination(basis: list[Matrix], coeffs) -> Matrix:
    out = None
    for c, B in zip(coeffs, basis):
        if c:
            out = B * c if out is None else out + B * c
    return out


def torus_search(g: LieAlgebra, der: DerivationBasis, height: int = DEFAULT_HEIGHT,
                 max_seeds: int = 25) -> TorusReport:
    """Bounded search for a commuting set of R-diagonalizable derivations.

    Candidates are integer combinations, coefficients in [-height, height],
    of the non-nilpotent elements of ``der.basis``, ordered by total weight
    and then lexicographically.  Starting from each of the first
    ``max_seeds`` usable candidates, a greedy pass adds every candidate that
    commutes with the current set and enlarges its span.  The largest set
    wins; ties go to the earliest seed.
    """
    if height < 1:
        raise ValueError("height must be at least 1")
    nonnil = [B for B in der.basis if not is_nilpotent_matrix(B)]
    k = len(nonnil)
    grid = [c for c in itertools.product(range(-height, height + 1), repeat=k) if any(c)]
    # one representative per ray with positive leading coefficient
    grid = [c for c in grid if next(x for x in c if x) > 0]
    grid.sort(key=lambda c: (sum(map(abs, c)), [-x for x in c]))

    usable: list[tuple[tuple[int, ...], Matrix]] = []
    for c in grid:
        D = _combination(nonnil, c)
        if semisimplicity_class(D) == R_DIAGONALIZABLE:
            usable.append((c, D))

    n2 = g.dim * g.dim
    flat = lambda D: tuple(x for r in D.rows for x in r)  # noqa: E731

    best: list[tuple[tuple[int, ...], Matrix]] = []
    for seed in range(min(max_seeds, len(usable))):
        chosen = [usable[seed]]
        span = Subspace(n2, [flat(usable[seed][1])], g.field)
        for c, D in usable:
            if any(not commutator(D, E).is_zero() for _, E in chosen):
                continue
            bigger = span + Subspace(n2, [flat(D)], g.field)
            if bigger.dim > span.dim:
                chosen.append((c, D))
                span = bigger
        if len(chosen) > len(best):
            best = chosen
    return TorusReport(
        generators=[D for _, D in best],
        classification=[R_DIAGONALIZABLE] * len(best),
        height=height,
        coefficients=[c for c, _ in best],
        candidates_tried=len(grid),
    )
