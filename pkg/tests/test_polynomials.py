from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conefourier.errors import DimensionError
from conefourier.polynomials import HomogeneousPolynomial
from conefourier.serialize import polynomial_from_json, polynomial_to_json

from conftest import rationals, vectors


def test_constant_and_zero():
    one = HomogeneousPolynomial.constant(3, 1)
    assert one.degree == 0 and one.evaluate((5, 6, 7)) == 1
    zero = HomogeneousPolynomial.zero(2, 3)
    assert zero.is_zero()


def test_coefficient_count_enforced():
    with pytest.raises(DimensionError):
        HomogeneousPolynomial(2, 2, (1, 2))


def test_multiply_linear_builds_product():
    # (x + y) * (x - y) = x^2 - y^2
    p = HomogeneousPolynomial.constant(2, 1).multiply_linear((1, 1)).multiply_linear((1, -1))
    assert p.coefficients == (1, 0, -1)


def test_addition_requires_matching_shape():
    with pytest.raises(DimensionError):
        HomogeneousPolynomial.zero(2, 1) + HomogeneousPolynomial.zero(2, 2)


@given(data=st.data())
def test_evaluate_respects_linear_factors(data):
    forms = [data.draw(vectors(3)) for _ in range(data.draw(st.integers(0, 3)))]
    point = data.draw(vectors(3))
    poly = HomogeneousPolynomial.constant(3, 1)
    for form in forms:
        poly = poly.multiply_linear(form)
    expected = Fraction(1)
    for form in forms:
        expected *= sum(a * b for a, b in zip(form, point))
    assert poly.evaluate(point) == expected


@given(data=st.data())
def test_scale_commutes_with_evaluate(data):
    coeffs = [data.draw(rationals) for _ in range(3)]
    lam = data.draw(rationals)
    point = data.draw(vectors(3))
    poly = HomogeneousPolynomial(3, 1, tuple(coeffs))
    assert poly.scale(lam).evaluate(point) == lam * poly.evaluate(point)


def test_json_round_trip():
    poly = HomogeneousPolynomial(3, 2, (Fraction(1, 2), 0, 0, -3, 0, Fraction(7, 5)))
    data = polynomial_to_json(poly)
    assert data["dimension"] == 3 and data["degree"] == 2
    assert all(term["coefficient"] != "0" for term in data["terms"])
    assert polynomial_from_json(data) == poly


def test_equality_is_exact():
    a = HomogeneousPolynomial(2, 1, (Fraction(1, 3), 1))
    b = HomogeneousPolynomial(2, 1, (Fraction(2, 6), 1))
    assert a == b
