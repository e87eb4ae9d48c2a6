"""Exact verification of the discrete identities behind the error formulas.

Everything here runs in arbitrary-precision integers/rationals: a check
returns True only when the two sides agree exactly.  Half-integer
factorials are expanded as rational multiples of sqrt(pi) via

    Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!),

which keeps every quantity in Q (the sqrt(pi) factors cancel wherever a
closed form is asserted to be rational).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "ExactRational",
    "Scale",
    "ScaledConstant",
    "binom",
    "check_identity_A",
    "check_identity_B",
    "gosper_g",
    "gosper_certificate",
    "check_gould",
    "L_closed",
    "D_closed",
    "check_coeff_identity_even",
    "check_coeff_identity_odd",
    "weighted_sum_A",
]

# Exact rationals are plain fractions.Fraction (always in lowest terms).
ExactRational = Fraction


class Scale(Enum):
    ONE = 1
    PI = 2
    SQRT_PI = 3


@dataclass(frozen=True)
class ScaledConstant:
    """An exact rational times 1, pi, or sqrt(pi)."""

    rational: Fraction
    scale: Scale

    def __float__(self) -> float:
        factor = {Scale.ONE: 1.0, Scale.PI: math.pi, Scale.SQRT_PI: math.sqrt(math.pi)}
        return float(self.rational) * factor[self.scale]


def binom(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def weighted_sum_A(n: int, h: int) -> int:
    """sum_{m=0}^{h} (-1)^m (2m+1) C(n+h, h-m) C(n+h, h+m+1), exactly."""
    return sum(
        (-1) ** m * (2 * m + 1) * binom(n + h, h - m) * binom(n + h, h + m + 1)
        for m in range(h + 1)
    )


def check_identity_A(n: int, h: int) -> bool:
    """Exact check of the closed form weighted_sum_A(n, h) == n * C(n+h, n)."""
    if n < 1 or h < 0:
        raise ValueError("need n >= 1 and h >= 0")
    return weighted_sum_A(n, h) == n * binom(n + h, n)


def _summand_B(h: int, l: int, m: int) -> int:
    return (-1) ** m * (2 * m + 1) * binom(2 * h + 1, h - m) * binom(m + l, 2 * l)


def check_identity_B(h: int, l: int) -> bool:
    """Exact check that sum_{m=l}^{h} (-1)^m (2m+1) C(2h+1, h-m) C(m+l, 2l) = 0."""
    if h < 1 or not (0 <= l <= h - 1):
        raise ValueError("need h >= 1 and 0 <= l <= h-1")
    return sum(_summand_B(h, l, m) for m in range(l, h + 1)) == 0


def gosper_g(h: int, l: int, m: int) -> Fraction:
    """Telescoping antidifference for check_identity_B.

    g_m = (-1)^{m+1} (h+m+1)(m-l) C(2h+1, h-m) C(m+l, 2l) / (h-l).
    The factor (m-l) forces g_l = 0.
    """
    if h == l:
        raise ValueError("h = l divides by zero")
    return Fraction(
        (-1) ** (m + 1) * (h + m + 1) * (m - l) * binom(2 * h + 1, h - m) * binom(m + l, 2 * l),
        h - l,
    )


def gosper_certificate(h: int, l: int, m: int) -> bool:
    """Exact check that g_{m+1} - g_m equals the summand of check_identity_B at m."""
    if not (0 <= l < h) or not (l <= m <= h):
        raise ValueError("need 0 <= l < h and l <= m <= h")
    return gosper_g(h, l, m + 1) - gosper_g(h, l, m) == _summand_B(h, l, m)


def check_gould(n: int, h: int) -> bool:
    """Exact check of Gould's convolution identity

    sum_{m=0}^{h} (-1)^m C(n+h, h-m) C(n+h, h+m) = C(n+h, h)/2 + C(n+h, h)^2/2,

    with the m = 0 term counted once.
    """
    if n < 0 or h < 0:
        raise ValueError("need n, h >= 0")
    lhs = Fraction(
        sum((-1) ** m * binom(n + h, h - m) * binom(n + h, h + m) for m in range(h + 1))
    )
    c = binom(n + h, h)
    return lhs == Fraction(c, 2) + Fraction(c * c, 2)


@lru_cache(maxsize=None)
def L_closed(n: int, m: int) -> ScaledConstant:
    """Closed form of int_{-pi}^{pi} cos((2m+1)t) cos(t) sin^{2n-2}(t) dt.

    Equals (-1)^m * pi/2^{2n-2} * C(2n-2, n+m-1) * (2m+1)/(n+m); the binomial
    convention makes it exactly zero for m >= n.
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    rat = Fraction(
        (-1) ** m * binom(2 * n - 2, n + m - 1) * (2 * m + 1),
        2 ** (2 * n - 2) * (n + m),
    )
    return ScaledConstant(rational=rat, scale=Scale.PI)


@lru_cache(maxsize=None)
def D_closed(n: int, m: int) -> Fraction:
    """Closed form of int_0^{pi} cos((2m+1)t) cos(t) sin^{2n-1}(t) dt.

    The sqrt(pi) carried by the half-integer factorial in the raw formula
    cancels exactly; the value is rational.
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    total = Fraction(0)
    for k in range(m + 1):
        hp = m + n - k + 1  # Gamma(hp + 1/2) expanded below
        total += Fraction(
            (-1) ** k
            * binom(2 * m + 1 - k, k)
            * math.factorial(2 * m + 2 - 2 * k)
            * 4 ** hp
            * math.factorial(hp),
            4 * (2 * m + 1 - k) * math.factorial(m + 1 - k) * math.factorial(2 * hp),
        )
    return math.factorial(n - 1) * (2 * m + 1) * total


def check_coeff_identity_even(n: int, h: int) -> bool:
    """Power-series coefficient identity for the even-exponent closed forms:

    sum_{m=0}^{h} L_m / ((h-m)! (h+m+1)!) == L_0 * n! / (h! (h+n)!)

    checked exactly in rationals after dividing out pi.
    """
    if n < 1 or h < 0:
        raise ValueError("need n >= 1 and h >= 0")
    lhs = sum(
        L_closed(n, m).rational / (math.factorial(h - m) * math.factorial(h + m + 1))
        for m in range(h + 1)
    )
    rhs = L_closed(n, 0).rational * Fraction(
        math.factorial(n), math.factorial(h) * math.factorial(h + n)
    )
    return lhs == rhs


def check_coeff_identity_odd(n: int, h: int) -> bool:
    """Power-series coefficient identity for the odd-exponent closed forms:

    sum_{m=0}^{h} D_m / ((h-m)! (h+m+1)!)
        == (n-1)!/4 * 2^{2h+2n+3} (h+n+1)! / (h! (2h+2n+2)!)

    exactly in rationals (both sides are rational once the half-integer
    factorial on the right is expanded).
    """
    if n < 1 or h < 0:
        raise ValueError("need n >= 1 and h >= 0")
    lhs = sum(
        D_closed(n, m) / (math.factorial(h - m) * math.factorial(h + m + 1))
        for m in range(h + 1)
    )
    rhs = Fraction(
        math.factorial(n - 1) * 2 ** (2 * h + 2 * n + 3) * math.factorial(h + n + 1),
        4 * math.factorial(h) * math.factorial(2 * h + 2 * n + 2),
    )
    return lhs == rhs
