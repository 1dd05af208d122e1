"""Floating-point cross-validation of the exact coefficients.

The spectral sum is the one thing the exact modules cannot check from the
inside: here it is summed directly to a guaranteed relative tolerance and
compared against the truncated expansion.  The measured decay order of the
remainder must land on the exponent of the first omitted nonzero term.

Double precision is enough; the acceptance tolerance on slopes (20%) sits
far above rounding noise for t >= 0.025.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .invariants import heat_invariant
from .spectrum import multiplicity

DEFAULT_MAX_K = 1_000_000

# how many omitted coefficients to scan before declaring that the
# remainder lies beyond every power of t (the circle case)
_SCAN_DEPTH = 16

# measured remainders below this (relative to the trace) are numeric noise
_NOISE_FLOOR = 1e-10


class TruncationCapError(RuntimeError):
    """t is too small for the configured summation cap."""


def _max_k() -> int:
    return int(os.environ.get("HEATSPHERE_MAX_K", DEFAULT_MAX_K))


@dataclass(frozen=True)
class RemainderEstimate:
    d: int
    n_terms: int
    t_values: tuple[float, float]
    observed_order: float
    expected_order: float | None
    relative_deviation: float | None
    status: str  # "ok", "inconclusive" or "beyond-all-orders"


def heat_trace_numeric(d: int, t: float, rel_tol: float = 1e-12) -> float:
    """Direct sum of mu_{k,d} e^(-t k(k+d-1)) with a certified tail cutoff.

    The tail from index k is bounded through mu <= (2k+d)^d and the
    decreasing term ratio rho(k); summation stops once that bound drops
    below rel_tol of the partial sum.  Deterministic for fixed inputs.
    """
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    if not 0 < rel_tol < 1:
        raise ValueError(f"rel_tol must lie in (0, 1), got {rel_tol}")
    cap = _max_k()
    acc = 1.0  # k = 0 term
    k = 1
    while True:
        envelope = (2 * k + d) ** d * math.exp(-t * k * (k + d - 1))
        rho = math.exp(-t * (2 * k + d)) * ((2 * k + d + 2) / (2 * k + d)) ** d
        if rho < 1 and envelope / (1 - rho) <= rel_tol * acc:
            return acc
        if k > cap:
            raise TruncationCapError(
                f"needed more than {cap} terms at d={d}, t={t}; "
                f"raise HEATSPHERE_MAX_K or increase t"
            )
        # exp(log mu - t lambda) keeps huge multiplicities inside float range
        acc += math.exp(math.log(multiplicity(k, d)) - t * k * (k + d - 1))
        k += 1


def asymptotic_sum(d: int, t: float, n_terms: int) -> float:
    """Sum of float(a_{n,d}) t^(n - d/2) over n = 0..n_terms-1."""
    if n_terms < 1:
        raise ValueError(f"n_terms must be positive, got {n_terms}")
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    acc = 0.0
    for n in range(n_terms):
        coeff = heat_invariant(n, d).value
        acc += float(coeff) * t ** (n - d / 2)
    return acc


def _first_omitted_exponent(d: int, n_terms: int) -> float | None:
    """Exponent of the first nonzero omitted term, or None if all omitted
    coefficients within the scan depth vanish."""
    for n in range(n_terms, n_terms + _SCAN_DEPTH):
        if heat_invariant(n, d).value:
            return n - d / 2
    return None


def remainder_order(d: int, n_terms: int, t0: float = 0.05) -> RemainderEstimate:
    """Measure log2(R(t0)/R(t0/2)) against the first omitted exponent.

    R(t) is |heat_trace_numeric - asymptotic_sum|.  When every omitted
    coefficient vanishes (the circle) the status is "beyond-all-orders";
    when the measured remainder sits below the numeric noise floor the
    status is "inconclusive".  Neither is a failure.
    """
    if n_terms < 1:
        raise ValueError(f"n_terms must be positive, got {n_terms}")
    if not 0 < t0 < 1:
        raise ValueError(f"t0 must lie in (0, 1), got {t0}")
    t_values = (t0, t0 / 2)
    expected = _first_omitted_exponent(d, n_terms)
    if expected is None:
        return RemainderEstimate(d, n_terms, t_values, 0.0, None, None, "beyond-all-orders")

    remainders = []
    for t in t_values:
        trace = heat_trace_numeric(d, t, rel_tol=1e-13)
        residual = abs(trace - asymptotic_sum(d, t, n_terms))
        if residual <= _NOISE_FLOOR * abs(trace):
            return RemainderEstimate(d, n_terms, t_values, 0.0, expected, None, "inconclusive")
        remainders.append(residual)

    observed = math.log2(remainders[0] / remainders[1])
    deviation = abs(observed - expected) / abs(expected) if expected != 0 else abs(observed)
    return RemainderEstimate(d, n_terms, t_values, observed, expected, deviation, "ok")
