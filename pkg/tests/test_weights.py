import random
from collections import Counter

import pytest

from rigidlie.catalog import catalog_get, catalog_keys
from rigidlie.claims import random_invertible
from rigidlie.errors import NotSolvableError, NotSplitError
from rigidlie.liealg import (
    LieAlgebra, ad, base_change, bracket_spaces, complexify, is_ideal, is_nilpotent, series_terms,
    subalgebra, whole,
)
from rigidlie.scalars import Scalar
from rigidlie.weights import is_completely_solvable, nilradical, triangularize, weights_split

KEYS = catalog_keys()
SL2 = LieAlgebra.from_brackets(3, [(1, 2, {2: 2}), (1, 3, {3: -2}), (2, 3, {1: 1})], name="sl2")


def check_triangular(ws):
    g = ws.algebra
    B = ws.flag_basis
    Binv = B.inverse()
    for i in range(g.dim):
        x = g.basis_vector(i)
        M = Binv @ ad(g, x) @ B
        assert M.is_upper_triangular()
        assert M.diagonal() == ws.diagonal(x)


@pytest.mark.parametrize("key", KEYS)
def test_flag_is_triangularizing(key):
    check_triangular(weights_split(catalog_get(key).algebra))


def test_nilpotent_weights_vanish():
    ws = triangularize(catalog_get("N6_6").algebra)
    assert all(not c for w in ws.weights for c in w)


@pytest.mark.parametrize("key", KEYS)
def test_weights_vanish_iff_nilpotent(key):
    g = catalog_get(key).algebra
    ws = weights_split(g)
    assert all(not c for w in ws.weights for c in w) == is_nilpotent(g)


def test_g2hat_weights():
    g = catalog_get("g2hat_r8_22_normal").algebra
    ws = triangularize(g)
    x7, x8 = g.element("X7"), g.element("X8")
    pairs = Counter((ws.weight_of(j, x7), ws.weight_of(j, x8)) for j in range(g.dim))
    want = Counter({(Scalar(i), Scalar(v)): 1 for i, v in zip(range(1, 7), (0, 1, 1, 1, 2, 2))})
    want[(Scalar(0), Scalar(0))] += 2  # the torus directions
    assert pairs == want


def test_complexified_g1hat_weights():
    g = complexify(catalog_get("g1hat_r8_22_2").algebra)
    ws = triangularize(g)
    i = Scalar(0, 1)
    got = Counter((ws.weight_of(j, g.element("X7")), ws.weight_of(j, g.element("X8"))) for j in range(8))
    want = Counter([(Scalar(1), i), (Scalar(1), -i), (Scalar(2), Scalar(0)), (Scalar(3), i), (Scalar(3), -i),
                    (Scalar(4), Scalar(0)), (Scalar(0), Scalar(0)), (Scalar(0), Scalar(0))])
    assert got == want


def test_not_solvable():
    with pytest.raises(NotSolvableError, match="Lie's theorem requires solvability"):
        triangularize(SL2)


def test_not_split_names_element():
    g = catalog_get("g1hat_r8_22_2").algebra
    with pytest.raises(NotSplitError) as exc:
        triangularize(g)
    assert "X8" in str(exc.value) and "T^2+1" in str(exc.value)


def test_nilradical_examples():
    g1 = catalog_get("N6_6").algebra
    assert nilradical(g1).dim == 6
    h = catalog_get("g1hat_r8_22_2").algebra
    N = nilradical(h)
    assert N.dim == 6 and all(N.contains(h.basis_vector(i)) for i in range(6))


@pytest.mark.parametrize("key", KEYS)
def test_nilradical_properties(key):
    e = catalog_get(key)
    g = e.algebra
    N = nilradical(g)
    assert N.dim == e.expect("nilradical_dim")
    assert is_ideal(g, N)
    assert N.contains_subspace(bracket_spaces(g, whole(g), whole(g)))
    assert series_terms(subalgebra(g, N), "lower_central")[-1].dim == 0


def test_complete_solvability_examples():
    assert is_completely_solvable(catalog_get("g2hat_r8_22_normal").algebra).completely_solvable
    r = is_completely_solvable(catalog_get("g1hat_r8_22_2").algebra)
    assert not r.completely_solvable and r.witness_label == "X8"
    assert str(r.witness_minpoly) == "T^3+T"
    assert any(v.im for v in r.witness_eigenvalues)
    for k in ("N6_6", "N6_7", "N6_12", "N6_14"):
        assert is_completely_solvable(catalog_get(k).algebra).completely_solvable


@pytest.mark.parametrize("key", ["g1hat_r8_22_2", "g2hat_r8_22_normal", "r8_29_2"])
def test_complete_solvability_base_change(key):
    rnd = random.Random(3)
    g = catalog_get(key).algebra
    ref = is_completely_solvable(g).completely_solvable
    for _ in range(3):
        h = base_change(g, random_invertible(rnd, 8))
        rep = is_completely_solvable(h)
        assert rep.completely_solvable == ref
        if not ref:  # witness really has a non-real eigenvalue
            assert any(v.im for v in rep.witness_eigenvalues)
