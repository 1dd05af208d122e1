"""Laplace spectrum of the round sphere S^d with curvature +1."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import ExactValue, factorial, gamma_half


def _check_dimension(d: int) -> None:
    if d <= 0:
        raise ValueError(f"sphere dimension must be positive, got {d}")


def eigenvalue(k: int, d: int) -> int:
    """k-th distinct eigenvalue k(k+d-1)."""
    _check_dimension(d)
    if k < 0:
        raise ValueError(f"eigenvalue index must be nonnegative, got {k}")
    return k * (k + d - 1)


def multiplicity(k: int, d: int) -> int:
    """Dimension (2k+d-1)(k+d-2)!/(k!(d-1)!) of the k-th eigenspace, 1 at k=0."""
    _check_dimension(d)
    if k < 0:
        raise ValueError(f"eigenvalue index must be nonnegative, got {k}")
    if k == 0:
        return 1
    num = (2 * k + d - 1) * factorial(k + d - 2)
    den = factorial(k) * factorial(d - 1)
    q, r = divmod(num, den)
    assert r == 0, (k, d)
    return q


@dataclass(frozen=True)
class SpectralDatum:
    k: int
    d: int
    lam: int
    mu: int

    @classmethod
    def of(cls, k: int, d: int) -> SpectralDatum:
        return cls(k=k, d=d, lam=eigenvalue(k, d), mu=multiplicity(k, d))


def sphere_volume(d: int) -> ExactValue:
    """vol(S^d) = 2 pi^((d+1)/2) / Gamma((d+1)/2), exactly."""
    _check_dimension(d)
    return ExactValue(Fraction(2), d + 1) / gamma_half(d + 1)


def weyl_leading_term(d: int) -> ExactValue:
    """Leading coefficient vol(S^d)/(4 pi)^(d/2) of the heat-trace expansion."""
    # (4 pi)^(d/2) = 2^d * pi^(d/2) regardless of the parity of d
    return sphere_volume(d) / ExactValue(Fraction(2) ** d, d)
