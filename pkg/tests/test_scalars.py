from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from rigidlie.errors import FieldError, NotSplitError
from rigidlie.scalars import (
    I_UNIT, Q, QI, Polynomial, Scalar, parse_scalar, poly_gcd, roots_in_field,
    split_roots, squarefree_part, sturm_real_root_count,
)

T = Polynomial.T()

big = st.integers(min_value=-10**30, max_value=10**30)
nonzero = big.filter(bool)
rationals = st.builds(Fraction, big, nonzero)
scalars = st.one_of(st.builds(Scalar, rationals), st.builds(Scalar, rationals, rationals))


def test_canonical_strings():
    assert str(Scalar(Fraction(6, -4))) == "-3/2"
    assert str(Scalar(5)) == "5"
    assert str(Scalar(Fraction(1, 2), Fraction(-3, 4))) == "1/2-3/4*i"
    assert str(I_UNIT) == "i"
    assert str(Scalar(0, Fraction(-3, 4))) == "-3/4*i"


def test_field_tag():
    assert Scalar(3).field == Q
    assert Scalar(0, 1).field == QI
    with pytest.raises(FieldError):
        Scalar(0, 1, Q)
    assert Scalar(2).in_field(QI).field == QI


@given(scalars)
def test_string_roundtrip(x):
    y = parse_scalar(str(x))
    assert y == x and str(y) == str(x)


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1


def test_i_squared():
    assert I_UNIT * I_UNIT == -1
    assert I_UNIT ** -1 == -I_UNIT


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_scalar("1/0x")


@pytest.mark.parametrize("p, n", [(T ** 2 + 1, 0), (T ** 3 + T, 1), (T ** 2 - 2, 2)])
def test_sturm_examples(p, n):
    assert sturm_real_root_count(p) == n


def test_sturm_errors():
    with pytest.raises(ValueError, match="indeterminate root count"):
        sturm_real_root_count(Polynomial())
    with pytest.raises(FieldError, match="rational coefficients"):
        sturm_real_root_count(T - I_UNIT)


@given(st.sets(st.integers(-20, 20), min_size=1, max_size=7))
def test_sturm_counts_integer_roots(roots):
    assert sturm_real_root_count(Polynomial.from_roots(roots)) == len(roots)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=7), st.integers(0, 2))
def test_sturm_against_sympy(roots, extra):
    p = Polynomial.from_roots(roots) * (T ** 2 + 1) ** extra
    x = sympy.Symbol("x")
    q = sympy.Poly(sum(int(c.re) * x ** k for k, c in enumerate(p.coeffs)), x)
    assert sturm_real_root_count(p) == len(set(sympy.real_roots(q)))


@pytest.mark.parametrize("p, want", [
    (T ** 2, T),
    (T ** 2 * (T ** 2 + 1) ** 2, T * (T ** 2 + 1)),
    (T ** 2 - 1, T ** 2 - 1),
])
def test_squarefree_examples(p, want):
    assert squarefree_part(p) == want


def test_squarefree_zero():
    with pytest.raises(ValueError):
        squarefree_part(Polynomial())


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6), st.integers(0, 2))
def test_squarefree_properties(roots, extra):
    p = Polynomial.from_roots(roots) * (T ** 2 + 1) ** extra * 3
    s = squarefree_part(p)
    assert (p % s).is_zero()
    assert poly_gcd(s, s.derivative()).degree == 0
    assert s.degree == len(set(roots)) + (2 if extra else 0)


def test_polynomial_str():
    assert str(T ** 3 + T) == "T^3+T"
    assert str(T ** 2 * (T ** 2 + 1) ** 2) == "T^6+2*T^4+T^2"


def test_divmod():
    a = (T ** 3 + 2 * T + 1)
    q, r = divmod(a, T - 1)
    assert q * (T - 1) + r == a and r.degree <= 0


def test_split_over_gaussian_rationals():
    roots, cof = split_roots(T ** 3 + T, QI)
    assert sorted(str(r) for r, _ in roots) == ["-i", "0", "i"]
    assert cof.degree == 0
    roots, cof = split_roots(T ** 3 + T, Q)
    assert [str(r) for r, _ in roots] == ["0"] and cof == T ** 2 + 1


def test_split_multiplicity_and_fractions():
    p = Polynomial.from_roots([Fraction(1, 2), Fraction(1, 2), Scalar(Fraction(-2, 3), 1)])
    roots, cof = split_roots(p, QI)
    got = {str(r): m for r, m in roots}
    assert got == {"1/2": 2, "-2/3+i": 1}


def test_not_split_names_element():
    with pytest.raises(NotSplitError) as exc:
        roots_in_field(T ** 2 - 2, QI, element="X3")
    assert "X3" in str(exc.value) and "T^2-2" in str(exc.value)
