"""Second-order linear recurrences and the coupled u/v tangent-numerator pair.

``w_eval`` evaluates the generic order-2 sequence with characteristic
polynomial t^2 - p*t + q.  The pair (u_n(x), v_n(x)) both satisfy that
recurrence with p = 2x and q = 1 + x^2; they are the numerator and
denominator data of n-fold arctangent addition and are computed here by
three independent routes (one-step coupled recurrence, generic recurrence,
binomial closed form) that the test suite plays against each other.

Lucas and Fibonacci numbers are the special case p = 1, q = -1 and feed the
golden-ratio identities: phi^m = (L_m + F_m*sqrt(5)) / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .values import Surd, Value, as_value, surd_normalize

__all__ = [
    "RecurrenceSpec",
    "UVPair",
    "w_eval",
    "uv_pair",
    "uv_closed",
    "lucas",
    "fibonacci",
    "phi_power",
    "min_poly_phi_power",
]


@dataclass(frozen=True)
class RecurrenceSpec:
    """Order-2 recurrence a_n = p*a_(n-1) - q*a_(n-2) with a_0, a_1 given."""

    alpha: Value
    beta: Value
    p: Value
    q: Value


@dataclass(frozen=True)
class UVPair:
    """(u_n(x), v_n(x)); invariant: u^2 + v^2 = (1 + x^2)^n."""

    u: Value
    v: Value
    n: int
    x: Value


def w_eval(spec: RecurrenceSpec, n: int) -> Value:
    """n-th term of the recurrence, evaluated iteratively and exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return as_value(spec.alpha)
    prev, cur = as_value(spec.alpha), as_value(spec.beta)
    p, q = as_value(spec.p), as_value(spec.q)
    for _ in range(n - 1):
        prev, cur = cur, p * cur - q * prev
    return cur


def uv_pair(n: int, x) -> UVPair:
    """(u_n, v_n) by the coupled one-step recurrence.

    u_n = x*u_(n-1) - v_(n-1) and v_n = u_(n-1) + x*v_(n-1), starting from
    (1, 0); this is the row of the n-th power of the 2x2 rotation-like
    matrix [[x, 1], [-1, x]].
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = as_value(x)
    u: Value = Fraction(1)
    v: Value = Fraction(0)
    for _ in range(n):
        u, v = x * u - v, u + x * v
    return UVPair(u, v, n, x)


def uv_closed(n: int, x) -> UVPair:
    """(u_n, v_n) from the binomial closed forms.

    u_n = sum_k C(n,2k) (-1)^k x^(n-2k),
    v_n = sum_k C(n,2k+1) (-1)^k x^(n-2k-1).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = as_value(x)
    powers: list[Value] = [Fraction(1)]
    for _ in range(n):
        powers.append(powers[-1] * x)
    u: Value = Fraction(0)
    v: Value = Fraction(0)
    for k in range(n // 2 + 1):
        sign = -1 if k & 1 else 1
        u = u + sign * math.comb(n, 2 * k) * powers[n - 2 * k]
        if 2 * k + 1 <= n:
            v = v + sign * math.comb(n, 2 * k + 1) * powers[n - 2 * k - 1]
    return UVPair(u, v, n, x)


_LUCAS = RecurrenceSpec(Fraction(2), Fraction(1), Fraction(1), Fraction(-1))
_FIBONACCI = RecurrenceSpec(Fraction(0), Fraction(1), Fraction(1), Fraction(-1))


def lucas(m: int) -> int:
    """Lucas number L_m (2, 1, 3, 4, 7, 11, ...)."""
    return int(w_eval(_LUCAS, m))


def fibonacci(m: int) -> int:
    """Fibonacci number F_m (0, 1, 1, 2, 3, 5, ...)."""
    return int(w_eval(_FIBONACCI, m))


def phi_power(m: int) -> Value:
    """Exact m-th power of the golden mean: (L_m + F_m*sqrt(5)) / 2.

    Returns a Surd for m >= 1 and Fraction(1) for m = 0.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    return surd_normalize(Fraction(lucas(m), 2), Fraction(fibonacci(m), 2), 5)


def min_poly_phi_power(m: int) -> tuple[int, int]:
    """Coefficients (h, k) of the minimal polynomial t^2 - h*t + k of phi^m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return lucas(m), (-1) ** m
