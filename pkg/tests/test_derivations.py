import random
from fractions import Fraction

import pytest
import sympy

from rigidlie.catalog import catalog_get, catalog_keys
from rigidlie.claims import random_invertible
from rigidlie.derivations import (
    C_DIAGONALIZABLE_ONLY, NOT_SEMISIMPLE, R_DIAGONALIZABLE, derivation_algebra, is_derivation,
    semisimplicity_class, torus_search,
)
from rigidlie.errors import StructureError
from rigidlie.liealg import LieAlgebra, ad, center
from rigidlie.linalg import Matrix, Subspace, commutator

KEYS = catalog_keys()
HEIS = LieAlgebra.from_brackets(3, [(1, 2, {3: 1})])


def leibniz_oracle_dim(g):
    """dim Der(g) by solving the Leibniz system symbolically."""
    n = g.dim
    D = sympy.Matrix(n, n, sympy.symbols(f"d0:{n * n}"))
    c = [[sympy.Matrix([g.structure_constant(i, j, k).re for k in range(n)]) for j in range(n)] for i in range(n)]

    def br(x, y):
        out = sympy.zeros(n, 1)
        for i in range(n):
            for j in range(n):
                if x[i] != 0 and y[j] != 0:
                    out += x[i] * y[j] * c[i][j]
        return out

    eqs = []
    E = sympy.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            eqs.extend(D * c[i][j] - br(D[:, i], E[:, j]) - br(E[:, i], D[:, j]))
    A, _ = sympy.linear_eq_to_matrix([e for e in eqs if e != 0], list(D))
    return n * n - A.rank()


def test_examples():
    assert derivation_algebra(catalog_get("g2hat_r8_22_normal").algebra).dim == 8
    assert derivation_algebra(LieAlgebra.abelian(3)).dim == 9
    assert derivation_algebra(HEIS).dim == 6


@pytest.mark.parametrize("key", ["N6_6", "N6_7", "N6_12", "N6_14"])
def test_dim_against_sympy(key):
    g = catalog_get(key).algebra
    assert derivation_algebra(g).dim == leibniz_oracle_dim(g)


@pytest.mark.parametrize("key", KEYS)
def test_basis_properties(key):
    g = catalog_get(key).algebra
    der = derivation_algebra(g)
    for D in der.basis:
        assert is_derivation(g, D) == []
    flat = lambda M: [x for r in M.rows for x in r]  # noqa: E731
    span = Subspace(g.dim ** 2, [flat(D) for D in der.basis])
    assert span.dim == der.dim
    for i in range(g.dim):
        A = ad(g, g.basis_vector(i))
        assert is_derivation(g, A) == []
        assert span.contains(flat(A))
    assert der.dim >= g.dim - center(g).dim


def test_is_derivation_examples():
    e = catalog_get("N6_6")
    g = e.algebra
    assert is_derivation(g, e.named_derivations["f1_1"]) == []
    assert is_derivation(g, e.named_derivations["f1_2"]) == []
    bad = is_derivation(g, Matrix.identity(6))
    assert bad[0][0] == (1, 2) and g.describe_vector(bad[0][1]) == "-X3"
    with pytest.raises(StructureError):
        is_derivation(g, Matrix.identity(5))


def test_named_derivations_commute():
    e6, e7 = catalog_get("N6_6"), catalog_get("N6_7")
    assert commutator(e6.named_derivations["f1_1"], e6.named_derivations["f1_2"]).is_zero()
    assert commutator(e7.named_derivations["g1_1"], e7.named_derivations["g1_2"]).is_zero()
    for name, D in e7.named_derivations.items():
        assert is_derivation(e7.algebra, D) == [], name


def test_semisimplicity_examples():
    e = catalog_get("N6_6")
    assert semisimplicity_class(e.named_derivations["f1_1"]) == R_DIAGONALIZABLE
    assert semisimplicity_class(e.named_derivations["f1_2"]) == C_DIAGONALIZABLE_ONLY
    assert semisimplicity_class(Matrix([[0, 1], [0, 0]])) == NOT_SEMISIMPLE


def test_semisimplicity_conjugation_invariant():
    rnd = random.Random(5)
    mats = [
        catalog_get("N6_6").named_derivations["f1_1"],
        catalog_get("N6_6").named_derivations["f1_2"],
        Matrix([[2, 1, 0, 0, 0, 0], [0, 2, 0, 0, 0, 0]] + [[0] * 6 for _ in range(4)]),
    ]
    for M in mats:
        ref = semisimplicity_class(M)
        for _ in range(5):
            P = random_invertible(rnd, 6)
            assert semisimplicity_class(P.inverse() @ M @ P) == ref


def test_torus_ranks():
    for key, want in [("N6_6", 1), ("N6_7", 2), ("N6_12", 2), ("N6_14", 1)]:
        g = catalog_get(key).algebra
        rep = torus_search(g, derivation_algebra(g))
        assert rep.rank_over_R == want == catalog_get(key).expect("torus_rank_R")
        for a in rep.generators:
            assert semisimplicity_class(a) == R_DIAGONALIZABLE
            for b in rep.generators:
                assert commutator(a, b).is_zero()
        assert "heuristic" in rep.banner


def test_torus_search_reproduces_stored_generators():
    for key in ("N6_12", "N6_14"):
        e = catalog_get(key)
        rep = torus_search(e.algebra, derivation_algebra(e.algebra))
        assert rep.generators == list(e.named_derivations.values())


def test_torus_rank_one_abelian():
    g = LieAlgebra.abelian(1)
    assert torus_search(g, derivation_algebra(g)).rank_over_R == 1


def test_torus_height_validation():
    g = catalog_get("N6_6").algebra
    with pytest.raises(ValueError):
        torus_search(g, derivation_algebra(g), height=0)


def test_torus_height_one_still_finds_n67_pair():
    g = catalog_get("N6_7").algebra
    assert torus_search(g, derivation_algebra(g), height=1).rank_over_R == 2


def test_f2_derivations_spectra():
    e = catalog_get("N6_7")
    P = e.base_changes["X_prime"]
    f22 = P.inverse() @ e.named_derivations["f2_2"] @ P
    assert f22 == Matrix.diag([0, 1, 1, 1, 2, 2])
    assert e.named_derivations["f2_1"] == (e.named_derivations["g1_1"] * 3 + e.named_derivations["g1_2"]) * Fraction(1, 2)
