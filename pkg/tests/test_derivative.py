from fractions import Fraction

import pytest

from schurquot.derivative import (
    derivative_numerator,
    numerator_for_variable,
    p_term,
    quotient_rule_numerator,
    verify_general_case,
    verify_general_case_via_chain,
    verify_pair_cancellation,
    verify_quotient_rule,
)
from schurquot.partitions import Partition, partition_contains, partitions_of
from schurquot.polynomial import SparsePolynomial
from schurquot.schur import schur_poly


def contained_pairs(max_boxes, max_nvars):
    for n in range(1, max_boxes + 1):
        for rp in partitions_of(n):
            rho = Partition(rp)
            for m in range(n):
                for lp in partitions_of(m):
                    lam = Partition(lp)
                    if not partition_contains(lam, rho):
                        continue
                    for nvars in range(max(2, rho.nrows, lam.nrows), max_nvars + 1):
                        yield rho, lam, nvars


def test_p_term_vanishes_on_diagonal():
    rho, lam = Partition((2, 1)), Partition((1, 1))
    assert p_term(1, 1, rho, lam, 3).is_zero()


def test_p_term_sign_factor():
    rho, lam = Partition((2, 1)), Partition((1, 1))
    # d < e gives the positive factor (e-d), so all coefficients are
    # positive; d > e gives negative coefficients.
    forward = p_term(0, 1, rho, lam, 3)
    backward = p_term(1, 0, rho, lam, 3)
    assert not forward.is_zero() and forward.min_coefficient() > 0
    assert not backward.is_zero() and backward.max_coefficient() < 0


def test_p_term_range_checks():
    rho, lam = Partition((2, 1)), Partition((1, 1))
    with pytest.raises(ValueError):
        p_term(3, 0, rho, lam, 3)
    with pytest.raises(ValueError):
        p_term(0, 2, rho, lam, 3)


def test_quotient_rule_oracle_simple_pair():
    rho, lam = Partition((2, 1)), Partition((1, 1))
    assert verify_quotient_rule(rho, lam, 3)


def test_numerator_agrees_with_quotient_rule_family():
    for rho, lam, nvars in contained_pairs(4, 3):
        assert verify_quotient_rule(rho, lam, nvars), (rho, lam, nvars)


def test_sign_theorem_family():
    for rho, lam, nvars in contained_pairs(4, 3):
        report = derivative_numerator(rho, lam, nvars)
        assert report.all_nonpositive, (rho, lam, nvars)
        assert not report.numerator.is_zero(), (rho, lam, nvars)


def test_equal_shapes_give_zero_numerator():
    rho = Partition((2, 1))
    report = derivative_numerator(rho, rho, 3)
    assert report.numerator.is_zero()


def test_ratio_strictly_decreasing_at_a_point():
    # the analytic meaning of the nonpositive numerator
    rho, lam = Partition((2, 1)), Partition((1,))
    num = derivative_numerator(rho, lam, 3).numerator
    s_rho = schur_poly(rho, 3)
    point = (Fraction(1), Fraction(2), Fraction(3))
    derivative = num.evaluate(point) / s_rho.evaluate(point) ** 2
    assert derivative < 0


def test_numerator_for_other_variables_by_symmetry():
    rho, lam = Partition((2, 1)), Partition((1, 1))
    for var in (1, 2, 3):
        assert numerator_for_variable(rho, lam, 3, var) == quotient_rule_numerator(
            rho, lam, 3, var=var
        )
    with pytest.raises(ValueError):
        numerator_for_variable(rho, lam, 3, 4)


def test_pair_cancellation_one_box():
    rho, lam = Partition((3, 1)), Partition((2, 1))
    for e in range(lam.part(1) + 1):
        for d in range(e + 1):
            assert verify_pair_cancellation(rho, lam, 3, d, e)
    with pytest.raises(ValueError):
        verify_pair_cancellation(rho, lam, 3, 2, 1)
    with pytest.raises(ValueError):
        verify_pair_cancellation(Partition((3, 1)), Partition((1, 1)), 3, 0, 1)


def test_general_case_via_chain():
    rho, lam = Partition((3, 2)), Partition((1,))
    assert verify_general_case(rho, lam, 3)
    assert verify_general_case_via_chain(rho, lam, 3)


def test_general_case_rejects_non_contained():
    with pytest.raises(ValueError):
        verify_general_case(Partition((2,)), Partition((1, 1)), 3)


def test_nvars_must_cover_rows():
    with pytest.raises(ValueError):
        derivative_numerator(Partition((1, 1, 1)), Partition((1,)), 2)
