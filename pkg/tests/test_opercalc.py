from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from heatsphere.exactnum import factorial
from heatsphere.opercalc import (
    TruncatedSeries,
    apply_to_monomial,
    check_bernoulli_link,
    check_euler_transform,
    check_lemma,
    invert_series,
    p_series,
    terminating_2f1,
    verify_lemmas,
)


def series(*coeffs, order=None):
    if order is None:
        order = len(coeffs) - 1
    return TruncatedSeries.from_coefficients([Fraction(c) for c in coeffs], order)


def test_series_construction_and_padding():
    s = TruncatedSeries.from_coefficients([1, 2], 4)
    assert s.coefficients == (1, 2, 0, 0, 0)
    s = TruncatedSeries.from_coefficients([1, 2, 3, 4], 1)
    assert s.coefficients == (1, 2)
    with pytest.raises(ValueError):
        TruncatedSeries(2, (Fraction(1),))
    with pytest.raises(ValueError):
        TruncatedSeries(-1, ())


def test_series_ring_operations():
    a = series(1, 1, order=3)  # 1 + D
    b = series(1, -1, order=3)
    assert (a * b).coefficients == (1, 0, -1, 0)
    assert (a + b).coefficients == (2, 0, 0, 0)
    assert (a - a).coefficients == (0, 0, 0, 0)
    assert (a ** 3).coefficients == (1, 3, 3, 1)
    assert (a * Fraction(1, 2)).coefficients == (Fraction(1, 2), Fraction(1, 2), 0, 0)
    assert (2 * a).coefficients == (2, 2, 0, 0)


def test_series_order_mismatch_rejected():
    with pytest.raises(ValueError):
        series(1, order=2) + series(1, order=3)
    with pytest.raises(ValueError):
        series(1, order=2) * series(1, order=1)
    with pytest.raises(ValueError):
        series(1, 1) ** -1


def test_p_series_coefficients():
    p = p_series(4)
    assert p.coefficients == (1, 0, Fraction(1, 24), 0, Fraction(1, 1920))
    # no odd powers, ever
    p = p_series(20)
    assert all(p.coefficients[i] == 0 for i in range(1, 21, 2))
    assert p.coefficients[20] == Fraction(1, 4**10 * factorial(21))


def test_invert_series_small():
    inv = invert_series(p_series(2))
    assert inv.coefficients == (1, 0, Fraction(-1, 24))
    assert (p_series(2) * inv).coefficients == (1, 0, 0)


def test_invert_series_is_true_inverse():
    p = p_series(12)
    assert (p * invert_series(p)) == TruncatedSeries.one(12)


def test_invert_rejects_zero_constant():
    with pytest.raises(ValueError):
        invert_series(series(0, 1, order=2))


rational_coeffs = st.lists(
    st.fractions(min_value=-4, max_value=4, max_denominator=8), min_size=1, max_size=6
)


@settings(max_examples=50)
@given(rational_coeffs)
def test_inversion_is_an_involution(coeffs):
    assume(coeffs[0] != 0)
    s = TruncatedSeries.from_coefficients(coeffs, len(coeffs) - 1)
    assert invert_series(invert_series(s)) == s


def test_apply_to_monomial():
    assert apply_to_monomial(series(0, 0, 1), 2) == 2
    # P^2 = 1 + D^2/12 + ..., so acting on x^2 at 0 picks out 2!/12
    p2 = p_series(4) * p_series(4)
    assert apply_to_monomial(p2, 2) == Fraction(1, 6)
    assert apply_to_monomial(p2, 0) == 1
    with pytest.raises(ValueError):
        apply_to_monomial(p2, 5)
    with pytest.raises(ValueError):
        apply_to_monomial(p2, -1)


def test_terminating_2f1_rational_values():
    assert terminating_2f1(-1, 3, 2, Fraction(1, 2)) == Fraction(1, 4)
    assert terminating_2f1(-2, 1, 1, 1) == 0
    # Chu-Vandermonde at z = 1: 2F1(-m, b; c; 1) = (c-b)_m / (c)_m
    assert terminating_2f1(-3, 2, 5, 1) == Fraction(60, 210)


def test_terminating_2f1_rejections():
    with pytest.raises(ValueError):
        terminating_2f1(Fraction(1, 2), Fraction(3, 2), Fraction(5, 2), 1)
    with pytest.raises(ValueError):
        terminating_2f1(-3, 5, -1, Fraction(1, 2))
    # pole past the truncation point is never reached
    assert terminating_2f1(-3, 5, -5, 0) == 1


def test_terminating_2f1_series_argument():
    # 2F1(-m, b; b; z) = (1 - z)^m holds verbatim for series z
    z = p_series(8) * p_series(8)
    lhs = terminating_2f1(-2, Fraction(3, 2), Fraction(3, 2), z)
    rhs = (TruncatedSeries.one(8) - z) ** 2
    assert lhs == rhs


def test_vanishing_mechanism_order():
    # (1 - P^2)^m starts exactly at D^(2m)
    for m in range(1, 6):
        order = 2 * m + 4
        q = TruncatedSeries.one(order) - p_series(order) * p_series(order)
        power = q ** m
        assert all(power.coefficients[i] == 0 for i in range(2 * m))
        assert power.coefficients[2 * m] == Fraction(-1, 12) ** m


def test_euler_transform_on_the_working_family():
    for n in range(1, 5):
        for omega in range(n - 1, n + 4):
            if omega < 0:
                continue
            for z in (Fraction(1, 3), Fraction(-1), Fraction(2)):
                assert check_euler_transform(-omega, Fraction(2 * n + 1, 2), Fraction(3, 2), z)


def test_euler_transform_precondition_rejections():
    with pytest.raises(ValueError):
        check_euler_transform(Fraction(1, 2), 1, 3, 0)
    with pytest.raises(ValueError):
        check_euler_transform(-1, 3, 1, 0)  # c-a-b = -1
    with pytest.raises(ValueError):
        check_euler_transform(-2, Fraction(1, 2), 5, 0)  # neither side terminates


def test_bernoulli_link_report():
    report = check_bernoulli_link(8)
    assert report.passed and report.points_checked == 8
    assert any("multiplicative inverse" in note for note in report.notes)
    with pytest.raises(ValueError):
        check_bernoulli_link(0)


def test_inverse_series_bernoulli_values():
    inv = invert_series(p_series(8))
    frozen = {1: Fraction(-1, 12), 2: Fraction(7, 240), 3: Fraction(-31, 1344), 4: Fraction(127, 3840)}
    for t, value in frozen.items():
        assert factorial(2 * t) * inv.coefficients[2 * t] == value


def test_check_lemma_instances():
    assert check_lemma("ff1_bb", 2, 1, 5)
    assert check_lemma("ff1_bb", 1, 0, 2)
    assert check_lemma("ff2_e2", 1, 0, 2)
    assert check_lemma("ff2_e2", 0, 2, 4)
    # one step below the stated bound the alternating sum stops vanishing
    assert not check_lemma("ff1_bb", 1, 0, 1)


def test_check_lemma_validation():
    with pytest.raises(ValueError):
        check_lemma("nope", 1, 0, 2)
    with pytest.raises(ValueError):
        check_lemma("ff1_bb", 0, 0, 2)
    with pytest.raises(ValueError):
        check_lemma("ff2_e2", 1, -1, 2)
    with pytest.raises(ValueError):
        check_lemma("ff2_e2", 1, 0, -1)


def test_verify_lemmas_report():
    report = verify_lemmas(t_max=4, s_max=3, slack=3)
    assert report.passed
    assert report.points_checked == 144
    assert any("16 of 16" in note for note in report.notes)


def test_verify_lemmas_small_box():
    report = verify_lemmas(t_max=2, s_max=1, slack=1)
    assert report.passed
