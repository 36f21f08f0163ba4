"""Chevalley-Eilenberg cohomology with adjoint coefficients, degrees 0..2.

A k-cochain basis element is a pair ``(I, t)`` with ``I = (i_1 < ... < i_k)``
and target ``t``; ``phi_{I,t}(e_I) = e_t`` and vanishes on other basis
k-tuples.  Pairs are ordered lexicographically by ``(I, t)``.

Differential, for ``phi`` in C^k::

    (d phi)(x_0..x_k) = sum_i (-1)^i [x_i, phi(..^x_i..)]
                      + sum_{i<j} (-1)^(i+j) phi([x_i, x_j], ..^x_i..^x_j..)

so ``d^0(x)(y) = [y, x]``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import StructureError
from .liealg import LieAlgebra, complexify
from .linalg import Matrix, rank_of_rows
from .scalars import QI, ZERO, Scalar


def cochain_index(n: int, k: int) -> list[tuple[tuple[int, ...], int]]:
    return [(I, t) for I in itertools.combinations(range(n), k) for t in range(n)]


def cochain_dim(n: int, k: int) -> int:
    return n * comb(n, k)


def _sort_with_sign(seq: list[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation (0 if an index repeats) and the sorted tuple."""
    if len(set(seq)) != len(seq):
        return 0, ()
    arr = list(seq)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


def coboundary_rows(g: LieAlgebra, k: int) -> list[dict[int, Scalar]]:
    """Sparse rows of d^k : C^k -> C^(k+1), one per (J, s) in C^(k+1) order."""
    if k not in (0, 1, 2):
        raise StructureError("coboundary degree must be 0, 1 or 2")
    n = g.dim
    col_pos = {key: p for p, key in enumerate(cochain_index(n, k))}
    rows = []
    for J in itertools.combinations(range(n), k + 1):
        block: list[dict[int, Scalar]] = [dict() for _ in range(n)]

        def add(s, col, c):
            r = block[s]
            r[col] = r.get(col, ZERO) + c

        # sum_i (-1)^i [x_i, phi(J \ j_i)]
        for i, ji in enumerate(J):
            rest = J[:i] + J[i + 1:]
            sgn = -1 if i % 2 else 1
            for t in range(n):
                for s, c in g.bracket_basis(ji, t):
                    add(s, col_pos[(rest, t)], c * sgn)
        # sum_{a<b} (-1)^(a+b) phi([x_a, x_b], J \ {j_a, j_b})
        for a, b in itertools.combinations(range(k + 1), 2):
            rest = J[:a] + J[a + 1:b] + J[b + 1:]
            sgn = -1 if (a + b) % 2 else 1
            for m, c in g.bracket_basis(J[a], J[b]):
                psign, I = _sort_with_sign([m, *rest])
                if not psign:
                    continue
                for s in range(n):
                    add(s, col_pos[(I, s)], c * (sgn * psign))
        for s in range(n):
            rows.append({c: v for c, v in block[s].items() if v})
    return rows


def coboundary_matrix(g: LieAlgebra, k: int) -> Matrix:
    rows = coboundary_rows(g, k)
    ncols = cochain_dim(g.dim, k)
    return Matrix([[r.get(c, 0) for c in range(ncols)] for r in rows], field=g.field)


@dataclass
class CohomologyReport:
    dim: int
    field: str
    h0: int
    h1: int
    h2: int
    rank_d0: int
    rank_d1: int
    rank_d2: int
    der_dim: int | None = None

    @property
    def rigid_certificate(self) -> bool:
        return self.h2 == 0

    @property
    def der_consistent(self) -> bool | None:
        if self.der_dim is None:
            return None
        return self.der_dim == self.dim - self.h0 + self.h1

    def dims(self) -> tuple[int, int, int]:
        return self.h0, self.h1, self.h2

    def to_json(self) -> dict:
        return {
            "dim": self.dim, "field": self.field,
            "h0": self.h0, "h1": self.h1, "h2": self.h2,
            "rank_d0": self.rank_d0, "rank_d1": self.rank_d1, "rank_d2": self.rank_d2,
            "cochain_dims": [cochain_dim(self.dim, k) for k in range(4)],
            "rigid_certificate": self.rigid_certificate,
            "der_dim": self.der_dim, "der_consistent": self.der_consistent,
        }


def coboundary_rank(g: LieAlgebra, k: int) -> int:
    return rank_of_rows(coboundary_rows(g, k), cochain_dim(g.dim, k), gaussian=g.field == QI)


def cohomology_dims(g: LieAlgebra, with_derivations: bool = False) -> CohomologyReport:
    n = g.dim
    r0, r1, r2 = (coboundary_rank(g, k) for k in range(3))
    h0 = n - r0
    h1 = (cochain_dim(n, 1) - r1) - r0
    h2 = (cochain_dim(n, 2) - r2) - r1
    der = None
    if with_derivations:
        from .derivations import derivation_algebra

        der = derivation_algebra(g).dim
    return CohomologyReport(n, g.field, h0, h1, h2, r0, r1, r2, der)


@dataclass
class RigidityReport:
    verdict: str
    h2: int
    h2_complexified: int | None
    note: str

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "h2": self.h2, "h2_complexified": self.h2_complexified, "note": self.note}


def rigidity_certificate(g: LieAlgebra, check_complexification: bool = False) -> RigidityReport:
    """Sufficient rigidity test: H^2(g, g) = 0 certifies rigidity.

    A nonzero H^2 proves nothing either way.  The cocycle equations have
    rational coefficients, so dim H^2 is the same over Q and over Q(i); with
    ``check_complexification`` this is recomputed rather than assumed.
    """
    rep = cohomology_dims(g)
    h2c = None
    if check_complexification and g.field != QI:
        h2c = cohomology_dims(complexify(g)).h2
    if rep.h2 == 0:
        verdict = "algebraically rigid"
        note = "H^2(g,g)=0 is sufficient for rigidity of the law"
    else:
        verdict = "inconclusive"
        note = f"H^2(g,g) has dimension {rep.h2}; vanishing is sufficient but not necessary, so no conclusion"
    note += "; dim H^2 is unchanged by complexification (rational cocycle equations)"
    return RigidityReport(verdict, rep.h2, h2c, note)
