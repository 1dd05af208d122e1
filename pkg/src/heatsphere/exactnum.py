"""Exact arithmetic foundation.

Everything downstream of this module is computed over arbitrary-precision
rationals.  Values carrying a half-integer power of pi are wrapped in
:class:`ExactValue`, which tracks the exponent separately so that no
irrational quantity is ever rounded before the caller asks for a float.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

# sqrt(pi) to 60 decimal digits.  Converting coeff * SQRT_PI**pi_half to
# float through Fraction keeps the final rounding to a single step, so the
# double we hand out is the correctly rounded one (ties aside).
SQRT_PI = Fraction("1.77245385090551602729816748334114518279754945612238712821381")


@dataclass(frozen=True)
class ExactValue:
    """A rational multiple of pi^(pi_half/2).

    The zero value is normalized to ``pi_half == 0`` so that equality and
    hashing behave; addition is only defined between values with matching
    exponent (or with zero), multiplication adds exponents.
    """

    coeff: Rational
    pi_half: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0 and self.pi_half != 0:
            object.__setattr__(self, "pi_half", 0)

    def __bool__(self) -> bool:
        return self.coeff != 0

    def __add__(self, other: ExactValue) -> ExactValue:
        if not isinstance(other, ExactValue):
            return NotImplemented
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.pi_half != other.pi_half:
            raise ValueError(
                f"cannot add pi^({self.pi_half}/2) and pi^({other.pi_half}/2) terms"
            )
        return ExactValue(self.coeff + other.coeff, self.pi_half)

    def __neg__(self) -> ExactValue:
        return ExactValue(-self.coeff, self.pi_half)

    def __sub__(self, other: ExactValue) -> ExactValue:
        return self + (-other)

    def __mul__(self, other: ExactValue | Rational | int) -> ExactValue:
        if isinstance(other, ExactValue):
            return ExactValue(self.coeff * other.coeff, self.pi_half + other.pi_half)
        return ExactValue(self.coeff * other, self.pi_half)

    __rmul__ = __mul__

    def __truediv__(self, other: ExactValue | Rational | int) -> ExactValue:
        if isinstance(other, ExactValue):
            if other.coeff == 0:
                raise ZeroDivisionError("division by exact zero")
            return ExactValue(self.coeff / other.coeff, self.pi_half - other.pi_half)
        return ExactValue(self.coeff / Fraction(other), self.pi_half)

    def as_rational(self) -> Rational:
        if self.pi_half != 0:
            raise ValueError(f"value carries pi^({self.pi_half}/2), not rational")
        return self.coeff

    def __float__(self) -> float:
        return float(self.coeff * SQRT_PI**self.pi_half)

    def __str__(self) -> str:
        if self.pi_half == 0:
            return str(self.coeff)
        if self.pi_half == 1:
            tag = "sqrt(pi)"
        elif self.pi_half % 2 == 0:
            tag = f"pi^{self.pi_half // 2}" if self.pi_half != 2 else "pi"
        else:
            tag = f"pi^({self.pi_half}/2)"
        return f"{self.coeff}*{tag}"


EXACT_ZERO = ExactValue(Fraction(0))


def factorial(m: int) -> int:
    """m! for m >= 0."""
    if m < 0:
        raise ValueError(f"factorial of negative integer {m}")
    return math.factorial(m)


def reciprocal_factorial(m: int) -> Rational:
    """1/m! for m >= 0, and exactly 0 for m < 0.

    The zero extension is the reciprocal-gamma convention; the coefficient
    formulas rely on it to silently drop out-of-range terms.
    """
    if m < 0:
        return Fraction(0)
    return Fraction(1, math.factorial(m))


def binomial(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a.  Negative a is rejected."""
    if a < 0:
        raise ValueError(f"binomial with negative upper index {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def pochhammer(t: Rational | int, m: int) -> Rational:
    """Rising factorial (t)_m = t(t+1)...(t+m-1), with (t)_0 = 1."""
    if m < 0:
        raise ValueError(f"pochhammer with negative length {m}")
    t = Fraction(t)
    acc = Fraction(1)
    for i in range(m):
        acc *= t + i
    return acc


def gamma_half(m: int) -> ExactValue:
    """Gamma(m/2) for a positive integer m.

    Gamma(1/2) = sqrt(pi) seeds the odd ladder and Gamma(1) = 1 the even
    one; Gamma(z+1) = z*Gamma(z) climbs down.  pi_half is 1 iff m is odd.
    """
    if m <= 0:
        raise ValueError(f"gamma_half needs a positive integer, got {m}")
    coeff = Fraction(1)
    while m > 2:
        m -= 2
        coeff *= Fraction(m, 2)
    return ExactValue(coeff, 1 if m == 1 else 0)


# B_0, B_1, ... computed on demand; guarded so concurrent callers cannot
# observe a half-extended table.
_bernoulli_table: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(m: int) -> Rational:
    """Bernoulli number B_m under the B_1 = -1/2 convention.

    Defining recurrence: sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1,
    i.e. the generating function z/(e^z - 1).
    """
    if m < 0:
        raise ValueError(f"bernoulli of negative index {m}")
    with _bernoulli_lock:
        while len(_bernoulli_table) <= m:
            j = len(_bernoulli_table)
            acc = sum(
                Fraction(math.comb(j + 1, k)) * _bernoulli_table[k] for k in range(j)
            )
            _bernoulli_table.append(-acc / (j + 1))
        return _bernoulli_table[m]
