import json
import os
import random

import pytest

from conftest import GOLDEN
from rigidlie.catalog import catalog_get, catalog_keys, MU2_PRIME
from rigidlie.claims import random_invertible
from rigidlie.errors import FieldError, SingularMatrixError, StructureError
from rigidlie.liealg import (
    LieAlgebra, ad, base_change, center, complexify, is_nilpotent, is_solvable, series, validate,
)
from rigidlie.linalg import Matrix, commutator
from rigidlie.scalars import I_UNIT, QI, Scalar

KEYS = catalog_keys()


def test_validate_catalog_and_abelian():
    for k in KEYS:
        assert validate(catalog_get(k).algebra) == []
    assert validate(LieAlgebra.abelian(5)) == []


def test_validate_reports_defect():
    g = LieAlgebra.from_brackets(3, [(1, 2, {3: 1}), (1, 3, {2: 1}), (2, 3, {2: 1})])
    defects = validate(g)
    assert [t for t, _ in defects] == [(1, 2, 3)]
    assert g.describe_vector(defects[0][1]) == "X3"


def test_out_of_range_index():
    with pytest.raises(StructureError):
        LieAlgebra.from_brackets(3, [(1, 4, {2: 1})])
    with pytest.raises(StructureError):
        LieAlgebra.from_brackets(3, [(1, 2, {0: 1})])


def test_antisymmetry_canonical():
    a = LieAlgebra.from_brackets(3, [(2, 1, {3: -1})])
    b = LieAlgebra.from_brackets(3, [(1, 2, {3: 1})])
    assert a == b and list(a.table) == [(1, 2)]


@pytest.mark.parametrize("key", KEYS)
def test_ad_golden(key):
    g = catalog_get(key).algebra
    with open(os.path.join(GOLDEN, f"ad_{key}.json")) as fh:
        golden = json.load(fh)
    for i in range(g.dim):
        assert ad(g, g.basis_vector(i)).to_json() == golden[i]


def test_ad_x1_on_g1():
    g = catalog_get("N6_6").algebra
    A = ad(g, g.element("X1"))
    for i in (2, 3, 4):
        col = A.column(i - 1)
        assert g.describe_vector(col) == f"X{i + 1}"
    assert not any(A.column(0)) and not any(A.column(4)) and not any(A.column(5))


def test_ad_of_central_element():
    g = catalog_get("N6_6").algebra
    z = center(g).vectors()[0]
    assert ad(g, z).is_zero()


def test_ad_dimension_mismatch():
    with pytest.raises(StructureError):
        ad(catalog_get("N6_6").algebra, (1, 0))


@pytest.mark.parametrize("key", KEYS)
def test_ad_is_homomorphism(key):
    g = catalog_get(key).algebra
    e = [g.basis_vector(i) for i in range(g.dim)]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            assert ad(g, g.bracket(e[i], e[j])) == commutator(ad(g, e[i]), ad(g, e[j]))


def test_series_examples():
    g1 = catalog_get("N6_6").algebra
    lc = series(g1, "lower_central")
    assert lc.dims == [6, 4, 3, 1, 0] and (lc.verdict, lc.length) == ("nilpotent", 4)
    assert series(LieAlgebra.abelian(4), "lower_central").dims == [4, 0]
    h = catalog_get("g1hat_r8_22_2").algebra
    assert is_solvable(h) and not is_nilpotent(h)
    assert series(h, "lower_central").dims == [8, 6]
    assert series(h, "derived").dims[-1] == 0


@pytest.mark.parametrize("key", KEYS)
def test_series_shape(key):
    e = catalog_get(key)
    lc = series(e.algebra, "lower_central").dims
    dr = series(e.algebra, "derived").dims
    assert lc == e.expect("lower_central_dims")
    assert all(a > b for a, b in zip(lc, lc[1:]))
    assert all(d <= c for d, c in zip(dr, lc + [lc[-1]] * len(dr)))
    c = complexify(e.algebra)
    assert series(c, "lower_central").dims == lc and series(c, "derived").dims == dr


def test_complexify():
    g = catalog_get("N6_6").algebra
    c = complexify(g)
    assert c.field == QI and c.same_table(g) and validate(c) == []
    with pytest.raises(ValueError, match="already complex"):
        complexify(c)


def test_base_change_to_x_prime():
    e = catalog_get("N6_7")
    h = base_change(e.algebra, e.base_changes["X_prime"])
    assert h.same_table(LieAlgebra.from_brackets(6, MU2_PRIME))


def test_printed_x_prime_does_not_reproduce_table():
    e = catalog_get("N6_7")
    h = base_change(e.algebra, e.base_changes["X_prime_printed"])
    assert not h.same_table(LieAlgebra.from_brackets(6, MU2_PRIME))


def test_complex_isomorphism_certificate():
    e6, e7 = catalog_get("N6_6"), catalog_get("N6_7")
    h = base_change(complexify(e7.algebra), e7.base_changes["complex_iso_to_N6_6"])
    assert h == complexify(e6.algebra)
    assert not base_change(complexify(e7.algebra), Matrix.identity(6, QI)).same_table(e6.algebra)


def test_base_change_identity_and_singular():
    g = catalog_get("N6_14").algebra
    assert base_change(g, Matrix.identity(6)) == g
    with pytest.raises(SingularMatrixError):
        base_change(g, Matrix.diag([1, 1, 1, 1, 1, 0]))


@pytest.mark.parametrize("key", KEYS)
def test_base_change_inverse(key):
    rnd = random.Random(hash(key) % 1000)
    g = catalog_get(key).algebra
    for _ in range(3):
        P = random_invertible(rnd, g.dim)
        h = base_change(g, P)
        assert validate(h) == []
        assert base_change(h, P.inverse()) == g


def test_complex_base_change_roundtrip():
    g = complexify(catalog_get("g2hat_r8_22_normal").algebra)
    P = Matrix.diag([1, I_UNIT, 2, 1, Scalar(1, 1), 1, 1, 3])
    assert base_change(base_change(g, P), P.inverse()) == g


@pytest.mark.parametrize("key", KEYS)
def test_json_roundtrip_byte_stable(key):
    g = catalog_get(key).algebra
    text = g.dumps()
    assert LieAlgebra.loads(text).dumps() == text
    c = complexify(g).dumps()
    assert LieAlgebra.loads(c).dumps() == c


def test_json_errors():
    with pytest.raises(StructureError, match="line 1 column"):
        LieAlgebra.loads('{"dim": 3, "brackets": [')
    with pytest.raises(StructureError):
        LieAlgebra.loads('{"brackets": []}')
    with pytest.raises(FieldError):
        LieAlgebra.loads('{"dim": 2, "field": "Q", "brackets": [[1, 2, [["i", 2]]]]}')


def test_custom_basis_names_roundtrip():
    g = LieAlgebra.from_brackets(3, [(1, 2, {3: 1})], basis_names=["x", "y", "z"])
    h = LieAlgebra.loads(g.dumps())
    assert h.basis_names == ("x", "y", "z") and h.element("z") == g.basis_vector(2)
