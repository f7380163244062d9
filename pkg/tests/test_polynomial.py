from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schurquot.polynomial import SparsePolynomial


def poly_strategy(nvars=3, max_terms=5):
    exps = st.tuples(*[st.integers(min_value=0, max_value=4)] * nvars)
    return st.dictionaries(
        exps, st.integers(min_value=-50, max_value=50), max_size=max_terms
    ).map(lambda d: SparsePolynomial(nvars, d))


def test_constructors():
    z = SparsePolynomial.zero(2)
    assert z.is_zero()
    c = SparsePolynomial.constant(2, 7)
    assert c.coefficient((0, 0)) == 7
    x2 = SparsePolynomial.variable(3, 2)
    assert x2.coefficient((0, 1, 0)) == 1
    m = SparsePolynomial.monomial(2, (1, 3), -2)
    assert m.coefficient((1, 3)) == -2


def test_zero_coefficients_dropped():
    p = SparsePolynomial(2, {(1, 0): 0, (0, 1): 3})
    assert len(p) == 1


def test_bad_exponents_rejected():
    with pytest.raises(ValueError):
        SparsePolynomial(2, {(1,): 1})
    with pytest.raises(ValueError):
        SparsePolynomial(2, {(-1, 0): 1})


def test_arithmetic_example():
    x = SparsePolynomial.variable(2, 1)
    y = SparsePolynomial.variable(2, 2)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.coefficient((2, 0)) == 1
    assert p.coefficient((0, 2)) == -1
    assert p.coefficient((1, 1)) == 0


def test_scalar_multiplication():
    x = SparsePolynomial.variable(2, 1)
    assert 3 * x == x * 3 == x.scale(3)
    assert x.scale(0).is_zero()


def test_evaluate_exact():
    x = SparsePolynomial.variable(2, 1)
    y = SparsePolynomial.variable(2, 2)
    p = x * x + y.scale(2)
    assert p.evaluate((Fraction(1, 2), Fraction(1, 3))) == Fraction(1, 4) + Fraction(2, 3)
    with pytest.raises(ValueError):
        p.evaluate((1,))


def test_partial_derivative():
    x = SparsePolynomial.variable(2, 1)
    y = SparsePolynomial.variable(2, 2)
    p = x * x * y + y  # d/dx = 2xy, d/dy = x^2 + 1
    assert p.partial(1) == SparsePolynomial(2, {(1, 1): 2})
    assert p.partial(2) == SparsePolynomial(2, {(2, 0): 1, (0, 0): 1})


def test_swap_variables():
    p = SparsePolynomial(3, {(2, 1, 0): 5})
    assert p.swap_variables(1, 3) == SparsePolynomial(3, {(0, 1, 2): 5})


def test_lift_with_shift():
    p = SparsePolynomial(2, {(1, 1): 3})
    lifted = p.lift(3, (0, 0, 2))
    assert lifted == SparsePolynomial(3, {(1, 1, 2): 3})
    with pytest.raises(ValueError):
        p.lift(1)


def test_terms_canonical_order():
    p = SparsePolynomial(2, {(0, 1): 1, (2, 0): 1, (1, 0): 1})
    assert [e for e, _ in p.terms()] == [(2, 0), (1, 0), (0, 1)]


def test_json_roundtrip():
    p = SparsePolynomial(2, {(2, 0): -3, (0, 1): 12345678901234567890})
    assert SparsePolynomial.from_json(p.to_json()) == p


def test_str():
    p = SparsePolynomial(2, {(2, 0): 1, (0, 1): -1})
    assert str(p) == "x1^2 - x2"
    assert str(SparsePolynomial.zero(2)) == "0"


def test_coefficient_extremes():
    p = SparsePolynomial(1, {(0,): -5, (1,): 2})
    assert p.max_coefficient() == 2
    assert p.min_coefficient() == -5
    assert SparsePolynomial.zero(1).max_coefficient() == 0


@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()


@given(poly_strategy(), poly_strategy())
def test_evaluation_is_ring_homomorphism(p, q):
    point = (Fraction(2, 3), Fraction(-1, 2), Fraction(5))
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)


@given(poly_strategy())
def test_derivative_of_product_rule(p):
    q = SparsePolynomial.variable(3, 1)
    left = (p * q).partial(1)
    right = p.partial(1) * q + p
    assert left == right
