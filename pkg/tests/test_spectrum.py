from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heatsphere.exactnum import ExactValue
from heatsphere.spectrum import (
    SpectralDatum,
    eigenvalue,
    multiplicity,
    sphere_volume,
    weyl_leading_term,
)


def test_eigenvalue_values():
    assert eigenvalue(0, 9) == 0
    assert eigenvalue(2, 2) == 6
    assert eigenvalue(1, 3) == 3


def test_multiplicity_values():
    assert multiplicity(0, 7) == 1
    assert multiplicity(1, 3) == 4
    assert multiplicity(2, 2) == 5


def test_dimension_validation():
    with pytest.raises(ValueError):
        eigenvalue(1, 0)
    with pytest.raises(ValueError):
        multiplicity(1, -2)
    with pytest.raises(ValueError):
        sphere_volume(0)


def test_circle_multiplicities():
    assert multiplicity(0, 1) == 1
    assert all(multiplicity(k, 1) == 2 for k in range(1, 30))


def test_low_dimension_closed_forms():
    for k in range(51):
        assert multiplicity(k, 2) == 2 * k + 1
        assert multiplicity(k, 3) == (k + 1) ** 2


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=1, max_value=12))
def test_multiplicity_positive_integer(k, d):
    mu = multiplicity(k, d)
    assert isinstance(mu, int) and mu >= 1


def test_spectral_datum():
    datum = SpectralDatum.of(2, 3)
    assert (datum.lam, datum.mu) == (8, 9)


def test_sphere_volumes():
    assert sphere_volume(1) == ExactValue(Fraction(2), 2)  # 2 pi
    assert sphere_volume(2) == ExactValue(Fraction(4), 2)  # 4 pi
    assert sphere_volume(3) == ExactValue(Fraction(2), 4)  # 2 pi^2


def test_weyl_leading_terms():
    assert weyl_leading_term(1) == ExactValue(Fraction(1), 1)
    assert weyl_leading_term(5) == ExactValue(Fraction(1, 32), 1)
    assert weyl_leading_term(7) == ExactValue(Fraction(1, 384), 1)


def test_weyl_pi_half_parity():
    for d in range(1, 13):
        assert weyl_leading_term(d).pi_half == d % 2
