import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heatsphere.exactnum import (
    ExactValue,
    bernoulli,
    binomial,
    factorial,
    gamma_half,
    pochhammer,
    reciprocal_factorial,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20
)


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(20) == 2432902008176640000


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_reciprocal_factorial_zero_extension():
    assert reciprocal_factorial(3) == Fraction(1, 6)
    assert reciprocal_factorial(-1) == 0
    assert reciprocal_factorial(-4) == 0


@given(st.integers(min_value=0, max_value=200))
def test_reciprocal_factorial_inverts_factorial(m):
    assert reciprocal_factorial(m) * factorial(m) == 1


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(4, 7) == 0
    assert binomial(7, -1) == 0
    assert binomial(30, 15) == 155117520


def test_binomial_against_pascal_triangle():
    # independent recurrence: row m from row m-1
    row = [1]
    for m in range(1, 31):
        row = [1] + [row[i] + row[i + 1] for i in range(m - 1)] + [1]
        assert row == [binomial(m, b) for b in range(m + 1)]


def test_binomial_rejects_negative_upper():
    with pytest.raises(ValueError):
        binomial(-2, 1)


def test_pochhammer_values():
    assert pochhammer(Fraction(5, 2), 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(-2, 3) == 0


@given(rationals, st.integers(min_value=0, max_value=30))
def test_pochhammer_recurrence(t, m):
    assert pochhammer(t, m + 1) == pochhammer(t, m) * (t + m)


def test_gamma_half_values():
    assert gamma_half(1) == ExactValue(Fraction(1), 1)
    assert gamma_half(2) == ExactValue(Fraction(1), 0)
    assert gamma_half(5) == ExactValue(Fraction(3, 4), 1)
    assert gamma_half(9) == ExactValue(Fraction(105, 16), 1)  # Gamma(9/2)


def test_gamma_half_rejects_nonpositive():
    with pytest.raises(ValueError):
        gamma_half(0)


@given(st.integers(min_value=1, max_value=80))
def test_gamma_half_recurrence(m):
    # Gamma(m/2 + 1) = (m/2) Gamma(m/2)
    assert gamma_half(m + 2) == gamma_half(m) * Fraction(m, 2)


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert all(bernoulli(m) == 0 for m in range(3, 25, 2))


def test_bernoulli_against_akiyama_tanigawa():
    # second, in-test oracle; this triangle scheme produces B_1 = +1/2,
    # everything else agrees with the recurrence convention
    def oracle(n):
        row = [Fraction(1, m + 1) for m in range(n + 1)]
        for j in range(1, n + 1):
            row = [(row[m] - row[m + 1]) * (m + 1) for m in range(n + 1 - j)]
        return row[0]

    for m in range(25):
        expected = -oracle(1) if m == 1 else oracle(m)
        assert bernoulli(m) == expected


def test_exact_value_zero_normalizes():
    assert ExactValue(Fraction(0), 3) == ExactValue(Fraction(0), 0)
    assert not ExactValue(Fraction(0), 3)


def test_exact_value_addition_rules():
    half_pi = ExactValue(Fraction(1, 2), 2)
    assert half_pi + half_pi == ExactValue(Fraction(1), 2)
    assert half_pi + ExactValue(Fraction(0), 0) == half_pi
    with pytest.raises(ValueError):
        half_pi + ExactValue(Fraction(1), 1)


def test_exact_value_division_subtracts_exponents():
    a = ExactValue(Fraction(3), 4)
    b = ExactValue(Fraction(2), 1)
    assert a / b == ExactValue(Fraction(3, 2), 3)
    assert (a / a).as_rational() == 1
    with pytest.raises(ValueError):
        b.as_rational()


exact_values = st.builds(
    ExactValue, rationals, st.integers(min_value=-3, max_value=3)
)


@given(exact_values, exact_values)
def test_exact_value_multiplication_commutes(a, b):
    assert a * b == b * a


@given(exact_values, exact_values, exact_values)
def test_exact_value_multiplication_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(rationals, rationals, st.integers(min_value=-3, max_value=3))
def test_exact_value_addition_matches_rational_addition(x, y, p):
    total = ExactValue(x, p) + ExactValue(y, p)
    assert total.coeff == x + y


def test_float_conversion():
    assert float(ExactValue(Fraction(1), 2)) == pytest.approx(math.pi, rel=1e-15)
    assert float(ExactValue(Fraction(1), 1)) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert float(ExactValue(Fraction(-3, 4), 0)) == -0.75


def test_str_rendering():
    assert str(ExactValue(Fraction(1, 4), 1)) == "1/4*sqrt(pi)"
    assert str(ExactValue(Fraction(2), 2)) == "2*pi"
    assert str(ExactValue(Fraction(0), 0)) == "0"
