import math

import pytest

from heatsphere.asymptotics import (
    TruncationCapError,
    asymptotic_sum,
    heat_trace_numeric,
    remainder_order,
)


def test_circle_trace_against_theta_limit():
    # for small t the d = 1 trace is sqrt(pi/t) up to exponentially small error
    for t in (0.05, 0.1, 0.2):
        assert heat_trace_numeric(1, t) == pytest.approx(math.sqrt(math.pi / t), rel=1e-11)


def test_trace_approaches_one_for_large_t():
    # only the constant eigenfunction survives
    assert heat_trace_numeric(2, 50.0) == pytest.approx(1.0, rel=1e-12)
    assert heat_trace_numeric(5, 50.0) == pytest.approx(1.0, rel=1e-12)


def test_trace_decreases_in_t():
    values = [heat_trace_numeric(3, t) for t in (0.05, 0.1, 0.2, 0.5)]
    assert values == sorted(values, reverse=True)


def test_trace_tolerance_coherence():
    loose = heat_trace_numeric(4, 0.1, rel_tol=1e-6)
    tight = heat_trace_numeric(4, 0.1, rel_tol=1e-13)
    assert loose == pytest.approx(tight, rel=1e-5)


def test_trace_validation():
    with pytest.raises(ValueError):
        heat_trace_numeric(0, 0.1)
    with pytest.raises(ValueError):
        heat_trace_numeric(2, 0.0)
    with pytest.raises(ValueError):
        heat_trace_numeric(2, 0.1, rel_tol=2.0)


def test_truncation_cap(monkeypatch):
    monkeypatch.setenv("HEATSPHERE_MAX_K", "100")
    with pytest.raises(TruncationCapError):
        heat_trace_numeric(2, 1e-7)
    monkeypatch.setenv("HEATSPHERE_MAX_K", "1000000")
    assert heat_trace_numeric(2, 0.1) > 0


def test_asymptotic_sum_values():
    # d = 2: a_0 = 1, a_1 = 1/3, a_2 = 1/15
    t = 0.2
    expected = (1 / t) * (1 + t / 3 + t * t / 15)
    assert asymptotic_sum(2, t, 3) == pytest.approx(expected, rel=1e-15)
    # d = 1 keeps only the Weyl term
    assert asymptotic_sum(1, 0.1, 1) == pytest.approx(math.sqrt(math.pi / 0.1), rel=1e-15)
    assert asymptotic_sum(1, 0.1, 5) == asymptotic_sum(1, 0.1, 1)


def test_asymptotic_sum_validation():
    with pytest.raises(ValueError):
        asymptotic_sum(2, 0.1, 0)
    with pytest.raises(ValueError):
        asymptotic_sum(2, -0.1, 2)


def test_remainder_order_sphere():
    est = remainder_order(3, 3)
    assert est.status == "ok"
    assert est.expected_order == 3 - 1.5
    assert est.relative_deviation is not None and est.relative_deviation < 0.2


def test_remainder_order_matches_first_omitted_nonzero():
    # d = 5: a_{6,5} = 0, so truncating after n = 5 skips ahead to n = 7
    est = remainder_order(5, 6)
    assert est.expected_order == 7 - 2.5
    assert est.status in ("ok", "inconclusive")


def test_remainder_order_circle_is_beyond_all_orders():
    est = remainder_order(1, 2)
    assert est.status == "beyond-all-orders"
    assert est.expected_order is None and est.relative_deviation is None


def test_remainder_order_validation():
    with pytest.raises(ValueError):
        remainder_order(2, 0)
    with pytest.raises(ValueError):
        remainder_order(2, 2, t0=1.5)


def test_remainder_order_reports_probe_points():
    est = remainder_order(2, 2, t0=0.04)
    assert est.t_values == (0.04, 0.02)
    assert est.d == 2 and est.n_terms == 2
