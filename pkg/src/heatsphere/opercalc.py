"""Truncated power series in the differentiation symbol D.

The series P(D) = 2 sinh(D/2) / D drives everything: its even coefficients
are 1/(4^i (2i+1)!), its powers act on monomials through
`apply_to_monomial`, and its multiplicative inverse carries the Bernoulli
numbers.  `terminating_2f1` evaluates hypergeometric sums whose argument
may itself be a truncated series, which is how the vanishing mechanism
(1 - P(D)^2)^(omega-n+1) = O(D^(2omega-2n+2)) gets exercised literally.

Sign convention: "1/P" in this module always means the multiplicative
inverse.  The alternative normalization D/(e^(-D/2) - e^(D/2)) is its
negative; `check_bernoulli_link` records how the Bernoulli formula reads
under each.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rational, bernoulli, factorial, pochhammer, reciprocal_factorial
from .verification import VerificationReport


@dataclass(frozen=True)
class TruncatedSeries:
    """Polynomial in D modulo D^(order+1); coefficient i belongs to D^i."""

    order: int
    coefficients: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        if len(self.coefficients) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coefficients)}"
            )

    @staticmethod
    def from_coefficients(coeffs, order: int) -> TruncatedSeries:
        cs = [Fraction(c) for c in coeffs[: order + 1]]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return TruncatedSeries(order, tuple(cs))

    @staticmethod
    def constant(c, order: int) -> TruncatedSeries:
        return TruncatedSeries.from_coefficients([Fraction(c)], order)

    @staticmethod
    def one(order: int) -> TruncatedSeries:
        return TruncatedSeries.constant(1, order)

    def _matched(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._matched(other)
        return TruncatedSeries(
            self.order,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, tuple(-a for a in self.coefficients))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries | Rational | int) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(self.order, tuple(a * c for a in self.coefficients))
        self._matched(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j in range(self.order + 1 - i):
                b = other.coefficients[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(self.order, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, m: int) -> TruncatedSeries:
        if m < 0:
            raise ValueError("negative series power; use invert_series first")
        acc = TruncatedSeries.one(self.order)
        base = self
        while m:
            if m & 1:
                acc = acc * base
            m >>= 1
            if m:
                base = base * base
        return acc


def p_series(order: int) -> TruncatedSeries:
    """2 sinh(D/2) / D truncated: coefficient of D^(2i) is 1/(4^i (2i+1)!)."""
    coeffs = [Fraction(0)] * (order + 1)
    for i in range(0, order // 2 + 1):
        coeffs[2 * i] = Fraction(1, 4**i * factorial(2 * i + 1))
    return TruncatedSeries(order, tuple(coeffs))


def invert_series(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse by long division; needs a nonzero constant term."""
    a0 = s.coefficients[0]
    if a0 == 0:
        raise ValueError("series with zero constant term has no inverse")
    out = [Fraction(1) / a0]
    for m in range(1, s.order + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            acc += s.coefficients[i] * out[m - i]
        out.append(-acc / a0)
    return TruncatedSeries(s.order, tuple(out))


def apply_to_monomial(s: TruncatedSeries, m: int) -> Rational:
    """(s(D) x^m) evaluated at x = 0, i.e. m! times the D^m coefficient."""
    if m < 0:
        raise ValueError(f"monomial degree must be nonnegative, got {m}")
    if m > s.order:
        raise ValueError(f"degree {m} exceeds truncation order {s.order}")
    return factorial(m) * s.coefficients[m]


def terminating_2f1(a, b, c, z):
    """Finite hypergeometric sum; z may be a Rational or a TruncatedSeries.

    Terminates because a or b is a nonpositive integer.  A nonpositive
    integer c reached before termination is a pole and is rejected.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    stops = [int(-v) for v in (a, b) if v.denominator == 1 and v <= 0]
    if not stops:
        raise ValueError("neither a nor b is a nonpositive integer: series does not terminate")
    m_max = min(stops)
    series = isinstance(z, TruncatedSeries)
    if not series:
        z = Fraction(z)
    term = TruncatedSeries.one(z.order) if series else Fraction(1)
    total = term
    for m in range(m_max):
        if c + m == 0:
            raise ValueError(f"pochhammer pole: c={c} hits zero at step {m}")
        factor = (a + m) * (b + m) / ((c + m) * (m + 1))
        term = term * z * factor
        total = total + term
    return total


def check_euler_transform(a, b, c, z) -> bool:
    """Exact check of 2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a,c-b;c;z).

    Demands parameters for which both sides are finite sums: a must be a
    nonpositive integer, c-a-b a nonnegative integer, and at least one of
    c-a, c-b a nonpositive integer.
    """
    a, b, c, z = Fraction(a), Fraction(b), Fraction(c), Fraction(z)
    if not (a.denominator == 1 and a <= 0):
        raise ValueError(f"a={a} must be a nonpositive integer")
    exponent = c - a - b
    if not (exponent.denominator == 1 and exponent >= 0):
        raise ValueError(f"c-a-b={exponent} must be a nonnegative integer")
    if not any(
        v.denominator == 1 and v <= 0 for v in (c - a, c - b)
    ):
        raise ValueError("transformed side does not terminate: need c-a or c-b "
                         "a nonpositive integer")
    lhs = terminating_2f1(a, b, c, z)
    rhs = (1 - z) ** int(exponent) * terminating_2f1(c - a, c - b, c, z)
    return lhs == rhs


def check_bernoulli_link(t_max: int) -> VerificationReport:
    """(2t)! times the D^(2t) coefficient of 1/P against Bernoulli numbers.

    With 1/P the multiplicative inverse the exact statement is
    (2t)! P_{2t} = 2 (B_{2t}/2^(2t) - B_{2t}/2); under the negated
    normalization the right side flips sign.  Both readings go in the
    notes so nobody has to rediscover which one this module uses.
    """
    if t_max < 1:
        raise ValueError(f"t_max must be positive, got {t_max}")
    report = VerificationReport("bernoulli-link", [("t", f"1..{t_max}")])
    inverse = invert_series(p_series(2 * t_max))
    for t in range(1, t_max + 1):
        computed = factorial(2 * t) * inverse.coefficients[2 * t]
        b = bernoulli(2 * t)
        expected = 2 * (b / 4**t - b / 2)
        report.record({"t": t}, computed, expected)
    report.notes.append(
        "convention: 1/P is the multiplicative inverse, so the match is "
        "(2t)! P_{2t} = +2(B_{2t}/2^{2t} - B_{2t}/2); the normalization "
        "D/(e^{-D/2} - e^{D/2}) = -1/P carries the opposite sign"
    )
    return report


def check_lemma(which: str, t: int, s: int, omega_prime: int) -> bool:
    """Exact check of one lemma instance.

    which = "ff1_bb": the alternating sum over P(D)^(2j) applied to x^(2t)
    vanishes; stated for omega_prime >= 2t + s, t >= 1.
    which = "ff2_e2": the analogous sum over P(D)^(2j+1) equals a closed
    multiple of (1/P)(x^(2t)); stated for omega_prime >= 2t + s, t >= 0.

    omega_prime below the stated bound is evaluated as asked: probing
    where the hypotheses stop holding is part of the test surface.
    """
    if which not in ("ff1_bb", "ff2_e2"):
        raise ValueError(f"unknown lemma {which!r}")
    if s < 0:
        raise ValueError(f"need s >= 0, got {s}")
    if omega_prime < 0:
        raise ValueError(f"need omega_prime >= 0, got {omega_prime}")
    if which == "ff1_bb" and t < 1:
        raise ValueError(f"ff1_bb needs t >= 1, got {t}")
    if which == "ff2_e2" and t < 0:
        raise ValueError(f"ff2_e2 needs t >= 0, got {t}")

    order = 2 * t + 2  # highest monomial degree touched
    p = p_series(order)
    p_squared = p * p

    if which == "ff1_bb":
        total = Fraction(0)
        power = TruncatedSeries.one(order)  # P^(2j)
        for j in range(omega_prime + 1):
            if j:
                power = power * p_squared
            weight = (
                reciprocal_factorial(omega_prime - j)
                * reciprocal_factorial(j + t - s)
                * reciprocal_factorial(2 * j + 1)
                * factorial(2 * j + 2 * t)
            )
            if weight == 0:
                continue
            value = weight * apply_to_monomial(power, 2 * t)
            total += -value if j % 2 else value
        return total == 0

    lhs = Fraction(0)
    power = p  # P^(2j+1)
    for j in range(omega_prime + 1):
        if j:
            power = power * p_squared
        weight = (
            reciprocal_factorial(omega_prime - j)
            * reciprocal_factorial(j + t - s)
            * reciprocal_factorial(2 * j + 2)
            * factorial(2 * j + 2 * t + 1)
        )
        if weight == 0:
            continue
        value = weight * apply_to_monomial(power, 2 * t)
        lhs += -value if j % 2 else value
    rhs = (
        factorial(2 * t)
        * pochhammer(t - s, s)
        / (2 * factorial(omega_prime + 1) * factorial(t))
        * apply_to_monomial(invert_series(p), 2 * t)
    )
    return lhs == rhs


def verify_lemmas(
    t_max: int = 4, s_max: int = 3, slack: int = 3
) -> VerificationReport:
    """Both lemmas on their stated boxes, plus the below-bound probe.

    The probe at omega_prime = 2t + s - 1 is informational: the stated
    bound is a hypothesis, not claimed sharp, so probe outcomes go into
    the notes instead of the pass/fail tally.
    """
    report = VerificationReport(
        "lemmas",
        [("t", f"0..{t_max}"), ("s", f"0..{s_max}"), ("omega'", f"2t+s..2t+s+{slack}")],
    )
    probe_failures = 0
    probe_points = 0
    for t in range(0, t_max + 1):
        for s in range(s_max + 1):
            for extra in range(slack + 1):
                omega_prime = 2 * t + s + extra
                if t >= 1:
                    report.record(
                        {"lemma": "ff1_bb", "t": t, "s": s, "omega'": omega_prime},
                        check_lemma("ff1_bb", t, s, omega_prime),
                        True,
                    )
                report.record(
                    {"lemma": "ff2_e2", "t": t, "s": s, "omega'": omega_prime},
                    check_lemma("ff2_e2", t, s, omega_prime),
                    True,
                )
            if t >= 1 and 2 * t + s - 1 >= 0:
                probe_points += 1
                if not check_lemma("ff1_bb", t, s, 2 * t + s - 1):
                    probe_failures += 1
    report.notes.append(
        f"ff1_bb probe at omega' = 2t+s-1: fails at {probe_failures} of "
        f"{probe_points} points (bound not claimed sharp; informational)"
    )
    return report
