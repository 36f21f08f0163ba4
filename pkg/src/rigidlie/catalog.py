"""Built-in algebras: the nilpotent laws N6_6, N6_7, N6_12, N6_14 and the
eight-dimensional rigid solvable algebras built on them.

Every expectation carries a provenance tag: ``printed`` when the value is read
directly off the published tables, ``derived`` when it was computed here by an
independent route and frozen.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import StructureError
from .liealg import LieAlgebra, validate
from .linalg import Matrix
from .scalars import I_UNIT, QI, Scalar

H = Fraction(1, 2)
QT = Fraction(1, 4)


def _images(n: int, images: dict[int, dict[int, object]]) -> Matrix:
    """Matrix of a linear map given by ``X_j -> sum c X_k`` (1-based)."""
    rows = [[0] * n for _ in range(n)]
    for j, img in images.items():
        for k, c in img.items():
            rows[k - 1][j - 1] = c
    return Matrix(rows)


def _basis(n: int, cols: list[dict[int, object]]) -> Matrix:
    return Matrix.from_columns([[col.get(i, 0) for i in range(1, n + 1)] for col in cols])


# -- nilpotent laws ----------------------------------------------------------

MU1 = [(1, 2, {3: 1}), (1, 3, {4: 1}), (1, 4, {5: 1}), (3, 2, {6: 1}), (6, 2, {5: 1})]
MU2 = [(1, 2, {3: 1}), (1, 3, {4: 1}), (1, 4, {5: 1}), (3, 2, {6: -1}), (6, 2, {5: 1})]
N612 = [(1, 2, {4: 1}), (1, 3, {5: 1}), (1, 4, {5: 1}), (2, 4, {6: 1})]
N614 = [(1, 2, {4: 1}), (1, 3, {5: 1}), (1, 4, {6: 1}), (2, 3, {6: 1}), (2, 4, {5: -1})]

# N6_7 rewritten in the eigenbasis X'
MU2_PRIME = [(1, 2, {3: 1}), (1, 3, {4: 1}), (1, 5, {6: 1}), (3, 2, {5: -1}), (2, 4, {6: 1})]

# -- solvable extensions -----------------------------------------------------

G1HAT = MU1 + [
    (7, 1, {1: 1}), (7, 2, {2: 1}), (7, 3, {3: 2}), (7, 5, {5: 4}), (7, 4, {4: 3}), (7, 6, {6: 3}),
    (8, 1, {2: 1}), (8, 2, {1: -1}), (8, 4, {6: -1}), (8, 6, {4: 1}),
]

# X7 acts as diag(1,...,6) on the nilradical; the table as printed has X7 acting
# as the identity, which violates Jacobi (kept below for reference).
G2HAT = MU2_PRIME + [(7, i, {i: i}) for i in range(1, 7)] + [
    (8, 2, {2: 1}), (8, 3, {3: 1}), (8, 4, {4: 1}), (8, 5, {5: 2}), (8, 6, {6: 2}),
]
G2HAT_PRINTED_BRACKETS = MU2_PRIME + [(7, i, {i: 1}) for i in range(1, 7)] + [
    (8, 2, {2: 1}), (8, 3, {3: 1}), (8, 4, {4: 1}), (8, 5, {5: 2}), (8, 6, {6: 2}),
]

R829_2 = N614 + [
    (7, 1, {1: 1}), (7, 2, {2: 1}), (7, 3, {3: 2}), (7, 4, {4: 2}), (7, 5, {5: 3}), (7, 6, {6: 3}),
    (8, 1, {2: 1}), (8, 2, {1: -1}), (8, 5, {6: 1}), (8, 6, {5: -1}),
]


@dataclass
class CatalogEntry:
    key: str
    label: str
    algebra: LieAlgebra
    named_derivations: dict[str, Matrix] = field(default_factory=dict)
    base_changes: dict[str, Matrix] = field(default_factory=dict)
    expectations: dict[str, tuple[object, str]] = field(default_factory=dict)
    torus: tuple[str, ...] = ()
    nil_partner: tuple[str, str | None] | None = None

    def expect(self, claim: str):
        return self.expectations[claim][0]

    def torus_vectors(self) -> list[tuple]:
        return [self.algebra.element(t) for t in self.torus]


def _f11() -> Matrix:
    return Matrix.diag([1, 1, 2, 3, 4, 3])


def _f12() -> Matrix:
    return _images(6, {1: {2: 1}, 2: {1: -1}, 4: {6: -1}, 6: {4: 1}})


def _g12() -> Matrix:
    return _images(6, {1: {2: 1}, 2: {1: 1}, 4: {6: 1}, 6: {4: 1}})


def _x_prime() -> Matrix:
    return _basis(6, [{1: H, 2: -H}, {1: H, 2: H}, {3: H}, {4: QT, 6: -QT}, {4: QT, 6: QT}, {5: QT}])


def _x_prime_printed() -> Matrix:
    return _basis(6, [{1: H, 2: H}, {1: -H, 2: H}, {3: H}, {4: QT, 6: -QT}, {4: QT, 6: QT}, {5: QT}])


def _complex_iso() -> Matrix:
    one = Scalar(1, 0, QI)
    return Matrix.diag([one, I_UNIT, I_UNIT, I_UNIT, I_UNIT, one])


# Torus derivations of N6_12 and N6_14 are not printed; these were produced by
# derivation_algebra + torus_search (height 3) and are re-derived in the tests.
N612_TORUS = {
    "t1": Matrix.diag([1, 0, 1, 1, 2, 1]),
    "t2": Matrix.diag([0, 1, 1, 1, 1, 2]),
}
N614_TORUS = {
    "t1": Matrix.diag([1, 1, 2, 2, 3, 3]),
}


def _build() -> dict[str, CatalogEntry]:
    P, D = "printed", "derived"
    cat: dict[str, CatalogEntry] = {}

    g11, g12 = _f11(), _g12()
    cat["N6_6"] = CatalogEntry(
        "N6_6", "N6,6 = g1 (mu1)", LieAlgebra.from_brackets(6, MU1, name="N6_6"),
        named_derivations={"f1_1": _f11(), "f1_2": _f12()},
        base_changes={"complex_iso_from_N6_7": _complex_iso()},
        expectations={
            "nilpotent": (True, P), "nilradical_dim": (6, P),
            "lower_central_dims": ([6, 4, 3, 1, 0], D), "center_dim": (1, D),
            "torus_rank_R": (1, P), "completely_solvable": (True, D),
        },
    )
    cat["N6_7"] = CatalogEntry(
        "N6_7", "N6,7 = g2 (mu2)", LieAlgebra.from_brackets(6, MU2, name="N6_7"),
        named_derivations={
            "g1_1": g11, "g1_2": g12,
            "f2_1": (g11 * 3 + g12) * H, "f2_2": (g11 + g12) * H,
        },
        base_changes={
            "X_prime": _x_prime(), "X_prime_printed": _x_prime_printed(),
            "complex_iso_to_N6_6": _complex_iso(),
        },
        expectations={
            "nilpotent": (True, P), "nilradical_dim": (6, P),
            "lower_central_dims": ([6, 4, 3, 1, 0], D), "center_dim": (1, D),
            "torus_rank_R": (2, P), "completely_solvable": (True, D),
            "spectrum_g1_1": ([1, 1, 2, 3, 3, 4], P), "spectrum_g1_2": ([-1, 1, 0, -1, 1, 0], P),
        },
    )
    cat["N6_12"] = CatalogEntry(
        "N6_12", "N6,12", LieAlgebra.from_brackets(6, N612, name="N6_12"),
        named_derivations=dict(N612_TORUS),
        expectations={
            "nilpotent": (True, P), "nilradical_dim": (6, P),
            "lower_central_dims": ([6, 3, 2, 0], D), "torus_rank_R": (2, P),
        },
    )
    cat["N6_14"] = CatalogEntry(
        "N6_14", "N6,14", LieAlgebra.from_brackets(6, N614, name="N6_14"),
        named_derivations=dict(N614_TORUS),
        expectations={
            "nilpotent": (True, P), "nilradical_dim": (6, P),
            "lower_central_dims": ([6, 3, 2, 0], D), "torus_rank_R": (1, P),
        },
    )
    cat["g1hat_r8_22_2"] = CatalogEntry(
        "g1hat_r8_22_2", "r^2_{8,22} = g1hat", LieAlgebra.from_brackets(8, G1HAT, name="g1hat_r8_22_2"),
        torus=("X7", "X8"),
        nil_partner=("N6_6", None),
        expectations={
            "nilpotent": (False, P), "solvable": (True, P), "nilradical_dim": (6, P),
            "completely_solvable": (False, P), "witness": ("X8", P),
            "minpoly_witness": ("T^3+T", P), "h2": (0, P), "lower_central_dims": ([8, 6], D),
        },
    )
    cat["g2hat_r8_22_normal"] = CatalogEntry(
        "g2hat_r8_22_normal", "r_{8,22} normal form = g2hat",
        LieAlgebra.from_brackets(8, G2HAT, name="g2hat_r8_22_normal"),
        torus=("X7", "X8"),
        nil_partner=("N6_7", "X_prime"),
        expectations={
            "nilpotent": (False, P), "solvable": (True, P), "nilradical_dim": (6, P),
            "completely_solvable": (True, P), "h2": (0, P), "der_dim": (8, P),
            "root_equations": (5, P), "root_rank": (5, P), "root_solution": ([[1, 0, 1, 2, 1, 2], [0, 1, 1, 1, 2, 2]], D),
            "lower_central_dims": ([8, 6], D),
        },
    )
    cat["r8_29_2"] = CatalogEntry(
        "r8_29_2", "r^2_{8,29}", LieAlgebra.from_brackets(8, R829_2, name="r8_29_2"),
        torus=("X7", "X8"),
        nil_partner=("N6_14", None),
        expectations={
            "nilpotent": (False, P), "solvable": (True, P), "nilradical_dim": (6, P),
            "completely_solvable": (False, P), "witness": ("X8", P), "lower_central_dims": ([8, 6], D),
        },
    )
    return cat


@lru_cache(maxsize=None)
def _catalog() -> dict[str, CatalogEntry]:
    return _build()


def catalog_keys() -> list[str]:
    return list(_catalog())


def catalog_get(key: str) -> CatalogEntry:
    try:
        return _catalog()[key]
    except KeyError:
        raise StructureError(f"unknown catalog key {key!r}; available: {', '.join(catalog_keys())}") from None


def printed_g2hat() -> LieAlgebra:
    """The eight-dimensional table exactly as printed (not a Lie algebra)."""
    return LieAlgebra.from_brackets(8, G2HAT_PRINTED_BRACKETS, name="g2hat_printed")


def printed_defects() -> list:
    return validate(printed_g2hat())
