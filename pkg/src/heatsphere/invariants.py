"""Heat-trace coefficients a_{n,d} of the round sphere, three ways.

Route "general" is the omega-parametrized double sum over the spectrum,
valid for every omega >= 2n (and only there: omega = 2n-1 provably gives a
different number, see `verify_sharpness`).  Routes "odd" and "even" are the
dimension-parity reductions driven by coefficient tables of the even
polynomial prod(z^2 - beta^2); route "closed" covers the one-line formulas
for d in {1, 2, 3, 5, 7}; route "weyl" is the n = 0 leading term.

All routes agree exactly where they overlap, which is the point: each one
serves as an independent oracle for the others (`verify_crosscheck`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import (
    ExactValue,
    Rational,
    bernoulli,
    binomial,
    factorial,
    gamma_half,
    reciprocal_factorial,
)
from .spectrum import eigenvalue, multiplicity, weyl_leading_term
from .verification import VerificationReport

CLOSED_FORM_DIMENSIONS = frozenset({1, 2, 3, 5, 7})

ROUTES = ("general", "odd", "even", "closed", "weyl")


@dataclass(frozen=True)
class KTableOdd:
    """Coefficients K_s, s = 1..alpha, of prod_{b=0}^{alpha-1}(z^2 - b^2)."""

    alpha: int
    entries: dict[int, Rational]


@dataclass(frozen=True)
class KTableEven:
    """Coefficients K_t, t = 0..nu-1, of prod over b = 1/2, 3/2, ..., nu-3/2
    of (z^2 - b^2), indexed so that K_t multiplies z^(2nu-2-2t)."""

    nu: int
    entries: dict[int, Rational]


@dataclass(frozen=True)
class HeatInvariantResult:
    n: int
    d: int
    omega_used: int | None
    route: str
    value: ExactValue


def _expand_even_product(roots_squared: list[Fraction]) -> list[Fraction]:
    # coefficients in u = z^2, ascending degree
    coeffs = [Fraction(1)]
    for r2 in roots_squared:
        coeffs = [Fraction(0)] + coeffs  # multiply by u
        for i in range(len(coeffs) - 1):
            coeffs[i] -= r2 * coeffs[i + 1]
    return coeffs


def k_table_odd(alpha: int) -> KTableOdd:
    if alpha < 1:
        raise ValueError(f"alpha must be positive, got {alpha}")
    coeffs = _expand_even_product([Fraction(b * b) for b in range(alpha)])
    # the b = 0 factor kills the constant term, so s runs from 1
    assert coeffs[0] == 0
    return KTableOdd(alpha, {s: coeffs[s] for s in range(1, alpha + 1)})


def k_table_even(nu: int) -> KTableEven:
    if nu < 1:
        raise ValueError(f"nu must be positive, got {nu}")
    roots = [Fraction(2 * i + 1, 2) ** 2 for i in range(nu - 1)]
    coeffs = _expand_even_product(roots)
    # K_t sits in front of z^(2nu-2-2t), i.e. u^(nu-1-t)
    return KTableEven(nu, {t: coeffs[nu - 1 - t] for t in range(nu)})


def _general_sum(n: int, d: int, omega: int) -> ExactValue:
    # Unchecked core of the general route.  The sharpness probe calls this
    # with omega = 2n - 1 on purpose; everyone else goes through
    # heat_invariant_general, which enforces omega >= 2n.
    front = gamma_half(2 * omega + d + 2)  # Gamma(omega + d/2 + 1)
    total = Fraction(0)
    for j in range(1, omega + 1):
        inner = 0
        for k in range(1, j + 1):
            term = (
                binomial(2 * j + d - 1, j - k)
                * multiplicity(k, d)
                * eigenvalue(k, d) ** (j + n)
            )
            inner += -term if k % 2 else term
        if inner:
            total += Fraction(
                inner, factorial(omega - j) * factorial(j + n) * factorial(2 * j + d)
            )
    sign = -1 if n % 2 else 1
    return ExactValue(2 * sign * front.coeff * total, front.pi_half)


def heat_invariant_general(n: int, d: int, omega: int) -> ExactValue:
    """General-route value; requires omega >= 2n, where it is omega-independent."""
    if n < 1:
        raise ValueError(f"general route needs n >= 1, got {n}")
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    if omega < 2 * n:
        raise ValueError(f"omega={omega} below the validity bound 2n={2 * n}")
    return _general_sum(n, d, omega)


def heat_invariant_odd(n: int, alpha: int) -> ExactValue:
    """a_{n, 2*alpha+1} as a single sum over the odd K-table.

    Terms where the factorial argument n - alpha + s goes negative vanish
    by the reciprocal-factorial convention, which here also keeps the
    power of alpha nonnegative.
    """
    if n < 1 or alpha < 1:
        raise ValueError(f"need n >= 1 and alpha >= 1, got n={n}, alpha={alpha}")
    table = k_table_odd(alpha)
    total = Fraction(0)
    for s in range(1, alpha + 1):
        rf = reciprocal_factorial(n - alpha + s)
        if rf == 0:
            continue
        total += (
            Fraction(alpha) ** (2 * n - 2 * alpha + 2 * s)
            * gamma_half(2 * s + 1).coeff
            * table.entries[s]
            * rf
        )
    return ExactValue(total / factorial(2 * alpha), 1)


def heat_invariant_even(n: int, nu: int) -> ExactValue:
    """a_{n, 2*nu}: polynomial part plus Bernoulli correction.

    The correction sum is empty when nu > n.  Its sign convention is the
    one that makes this route agree with the general route exactly; the
    inverse-series ledger lives in opercalc.check_bernoulli_link.
    """
    if n < 1 or nu < 1:
        raise ValueError(f"need n >= 1 and nu >= 1, got n={n}, nu={nu}")
    table = k_table_even(nu)
    half = Fraction(2 * nu - 1, 2)  # nu - 1/2
    total = Fraction(0)
    for t in range(nu):
        rf = reciprocal_factorial(n - t)
        if rf == 0:
            continue
        total += factorial(nu - 1 - t) * rf * half ** (2 * n - 2 * t) * table.entries[t]
    for t in range(nu):
        k_t = table.entries[t]
        for p in range(nu - t, n - t + 1):
            sign = -1 if (p + nu - t - 1) % 2 else 1
            total += (
                sign
                * half ** (2 * n - 2 * t - 2 * p)
                * bernoulli(2 * p)
                * (Fraction(1, 2 ** (2 * p - 1)) - 1)
                * k_t
                / (p * factorial(n - t - p) * factorial(p - nu + t))
            )
    return ExactValue(total / factorial(2 * nu - 1), 0)


def _closed_d2(n: int) -> Rational:
    # Bernoulli form of a_{n,2}
    total = Fraction(0)
    for r in range(n + 1):
        sign = -1 if r % 2 else 1
        total += sign * binomial(n, r) * (2 - 4**r) * bernoulli(2 * r)
    return total / (factorial(n) * 4**n)


def heat_invariant_closed(n: int, d: int) -> ExactValue:
    """One-line closed forms for d in {1, 2, 3, 5, 7}; n = 0 falls back to weyl."""
    if d not in CLOSED_FORM_DIMENSIONS:
        raise ValueError(f"no closed form for d={d}; supported: 1, 2, 3, 5, 7")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return weyl_leading_term(d)
    if d == 1:
        return ExactValue(Fraction(0))
    if d == 2:
        return ExactValue(_closed_d2(n))
    if d == 3:
        return ExactValue(Fraction(1, 4 * factorial(n)), 1)
    if d == 5:
        return ExactValue(Fraction(4) ** (n - 3) * (6 - n) / (3 * factorial(n)), 1)
    poly = 16 * n * n - 286 * n + 1215
    return ExactValue(Fraction(3) ** (2 * n - 6) * poly / (640 * factorial(n)), 1)


def heat_invariant(
    n: int, d: int, omega: int | None = None, formula: str = "auto"
) -> HeatInvariantResult:
    """Dispatcher over the routes; records which one ran.

    n = 0 always resolves to the Weyl term (no formula covers it), taking
    precedence over both `omega` and `formula`.  An explicit omega under
    "auto" forces the general route; otherwise parity picks odd/even.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    if formula not in ("auto", "general", "odd", "even", "closed"):
        raise ValueError(f"unknown formula {formula!r}")
    if omega is not None and formula not in ("auto", "general"):
        raise ValueError(f"omega is only meaningful for the general route, not {formula!r}")

    if n == 0:
        return HeatInvariantResult(n, d, None, "weyl", weyl_leading_term(d))

    if formula == "general" or (formula == "auto" and omega is not None):
        w = 2 * n if omega is None else omega
        return HeatInvariantResult(n, d, w, "general", heat_invariant_general(n, d, w))
    if formula == "closed":
        return HeatInvariantResult(n, d, None, "closed", heat_invariant_closed(n, d))
    if formula == "odd" and d % 2 == 0:
        raise ValueError(f"odd route needs odd d, got {d}")
    if formula == "even" and d % 2 == 1:
        raise ValueError(f"even route needs even d, got {d}")

    if d % 2 == 1:
        if d == 1:
            # alpha = 0 leaves an empty sum: every a_{n,1} with n >= 1 is 0
            return HeatInvariantResult(n, d, None, "odd", ExactValue(Fraction(0)))
        value = heat_invariant_odd(n, (d - 1) // 2)
        return HeatInvariantResult(n, d, None, "odd", value)
    value = heat_invariant_even(n, d // 2)
    return HeatInvariantResult(n, d, None, "even", value)


def verify_crosscheck(
    n_range: tuple[int, int] = (1, 8), d_range: tuple[int, int] = (2, 11)
) -> VerificationReport:
    """General route at omega = 2n against the parity route, cell by cell."""
    n_lo, n_hi = n_range
    d_lo, d_hi = d_range
    report = VerificationReport(
        "crosscheck", [("n", f"{n_lo}..{n_hi}"), ("d", f"{d_lo}..{d_hi}")]
    )
    for d in range(d_lo, d_hi + 1):
        for n in range(n_lo, n_hi + 1):
            general = heat_invariant_general(n, d, 2 * n)
            parity = heat_invariant(n, d).value
            report.record({"n": n, "d": d}, general, parity)
    return report


def verify_omega_stability(
    n_range: tuple[int, int] = (1, 6), d_range: tuple[int, int] = (1, 8)
) -> VerificationReport:
    """Value must not move anywhere on omega in [2n, 3n+4]."""
    n_lo, n_hi = n_range
    d_lo, d_hi = d_range
    report = VerificationReport(
        "omega-stability",
        [("n", f"{n_lo}..{n_hi}"), ("d", f"{d_lo}..{d_hi}"), ("omega", "2n..3n+4")],
    )
    for d in range(d_lo, d_hi + 1):
        for n in range(n_lo, n_hi + 1):
            base = heat_invariant_general(n, d, 2 * n)
            for omega in range(2 * n + 1, 3 * n + 5):
                report.record(
                    {"n": n, "d": d, "omega": omega},
                    heat_invariant_general(n, d, omega),
                    base,
                )
    return report


def verify_sharpness(
    points: tuple[tuple[int, int], ...] = ((1, 1), (2, 1), (2, 3))
) -> VerificationReport:
    """omega = 2n - 1 must give a different number than omega = 2n."""
    report = VerificationReport(
        "sharpness", [("(n,d)", ",".join(f"({n},{d})" for n, d in points))]
    )
    for n, d in points:
        below = _general_sum(n, d, 2 * n - 1)
        at_bound = _general_sum(n, d, 2 * n)
        report.record({"n": n, "d": d}, below != at_bound, True)
        if below != at_bound:
            report.notes.append(
                f"(n={n}, d={d}): omega={2 * n - 1} gives {below}, omega={2 * n} gives {at_bound}"
            )
    return report
