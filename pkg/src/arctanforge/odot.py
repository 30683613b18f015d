"""The arctangent composition product and exact angle folding.

Tangent addition makes the real line (minus the right-angle singularities)
a commutative group under ``x (*) y = (x + y) / (1 - x*y)``; arctangents
then add up to an integer number of half-turns:

    arctan(x) + arctan(y) = arctan(x (*) y)            if x*y < 1
    arctan(x) + arctan(y) = arctan(x (*) y) + sign(x)*pi   if x*y > 1
    arctan(x) + arctan(y) = sign(x)*pi/2               if x*y = 1

:class:`NormalAngle` carries the pair (t, h) for the angle
arctan(t) + h*(pi/2), so the singular right angles stay representable while
plain Values never have to encode an infinite tangent.  ``fold_term``
accumulates whole identities one arctangent at a time with the winding
count tracked exactly.

Powers under the product reduce to the u/v sequences:

    (1/x)^(*n) = v_n(x) / u_n(x)
    x^(*n)     = u_n(x) / v_n(x)    for odd n,
               = -v_n(x) / u_n(x)   for even n,

and n-th roots of x are the real zeros of x*u_n(z) + v_n(z) (n even) or
x*v_n(z) - u_n(z) (n odd), exposed by :func:`root_poly`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    DegenerateArgumentError,
    RightAngleError,
    UnsupportedRadicalError,
    UnsupportedRhsError,
)
from .sequences import uv_closed, uv_pair
from .values import Surd, Value, as_value, value_sign, value_sqrt

__all__ = [
    "NormalAngle",
    "OdotPolynomial",
    "ZERO_ANGLE",
    "odot",
    "odot_pow",
    "odot_pow_reciprocal",
    "fold_term",
    "fold_terms",
    "root_poly",
]


def odot(x, y) -> Value:
    """Exact (x + y) / (1 - x*y); raises RightAngleError when x*y = 1."""
    x, y = as_value(x), as_value(y)
    denom = 1 - x * y
    if value_sign(denom) == 0:
        raise RightAngleError("x*y = 1: the angle sum is an odd multiple of pi/2")
    return (x + y) / denom


def odot_pow_reciprocal(x, n: int) -> Value:
    """(1/x) composed with itself n times: v_n(x) / u_n(x)."""
    x = as_value(x)
    _check_pow_args(x, n)
    pair = uv_pair(n, x)
    if value_sign(pair.u) == 0:
        raise RightAngleError(f"u_{n}({x}) = 0: angle is an odd multiple of pi/2")
    return pair.v / pair.u

def odot_pow(x, n: int) -> Value:
    """x composed with itself n times.

    Equals u_n(x)/v_n(x) for odd n and -v_n(x)/u_n(x) for even n, and agrees
    with the iterated product whenever no intermediate right angle occurs.
    """
    x = as_value(x)
    _check_pow_args(x, n)
    pair = uv_pair(n, x)
    if n % 2:
        if value_sign(pair.v) == 0:
            raise RightAngleError(f"v_{n}({x}) = 0: angle is an odd multiple of pi/2")
        return pair.u / pair.v
    if value_sign(pair.u) == 0:
        raise RightAngleError(f"u_{n}({x}) = 0: angle is an odd multiple of pi/2")
    return -(pair.v / pair.u)


def _check_pow_args(x: Value, n: int) -> None:
    if n < 1:
        raise ValueError("n must be a positive integer")
    if isinstance(x, Fraction) and abs(x) == 1:
        raise DegenerateArgumentError("x = +-1 is excluded")


# Exact tangents of r*pi for r in (-1/4, 1/4]; everything else that the
# package can express reduces to these after extracting half-turns.
_TAN_TABLE: dict[Fraction, Value] = {
    Fraction(0): Fraction(0),
    Fraction(1, 4): Fraction(1),
    Fraction(1, 6): Surd(0, Fraction(1, 3), 3),
    Fraction(-1, 6): Surd(0, Fraction(-1, 3), 3),
    Fraction(1, 8): Surd(-1, 1, 2),
    Fraction(-1, 8): Surd(1, -1, 2),
    Fraction(1, 12): Surd(2, -1, 3),
    Fraction(-1, 12): Surd(-2, 1, 3),
}
_TAN_LOOKUP = {t: r for r, t in _TAN_TABLE.items()}


@dataclass(frozen=True)
class NormalAngle:
    """The exact angle arctan(t) + h*(pi/2), h an integer half-turn count.

    The canonical representative keeps t in (-1, 1], i.e. the arctangent
    part in (-pi/4, pi/4]; in that range the representation of any angle is
    unique, which is what ``same_angle`` compares.
    """

    t: Value
    h: int

    def canonical(self) -> "NormalAngle":
        t, h = self.t, self.h
        s = value_sign(t)
        if s > 0 and value_sign(t - 1) > 0:  # t > 1
            return NormalAngle(-(1 / t), h + 1)
        if s < 0:
            c = value_sign(t + 1)
            if c < 0:  # t < -1
                return NormalAngle(-(1 / t), h - 1)
            if c == 0:  # t = -1
                return NormalAngle(Fraction(1), h - 1)
        return self

    def same_angle(self, other: "NormalAngle") -> bool:
        return self.canonical() == other.canonical()

    def to_pi_multiple(self) -> Fraction | None:
        """r with angle = r*pi, when the angle is such a rational multiple."""
        c = self.canonical()
        frac = _TAN_LOOKUP.get(c.t)
        if frac is None:
            return None
        return frac + Fraction(c.h, 2)

    @classmethod
    def from_pi_multiple(cls, r) -> "NormalAngle":
        """Canonical NormalAngle of the angle r*pi.

        Supports every r whose tangent lies in a single quadratic field,
        i.e. denominators dividing 4, 6, 8 or 12.
        """
        r = Fraction(r)
        # split r*pi = frac*pi + h*(pi/2) with frac in (-1/4, 1/4]
        h = -((1 - 4 * r) // 2)  # ceil(2r - 1/2) done in integer arithmetic
        frac = r - Fraction(h, 2)
        t = _TAN_TABLE.get(frac)
        if t is None:
            raise UnsupportedRhsError(
                f"tan({r}*pi) is not representable in a quadratic field"
            )
        return cls(t, int(h))

    def __float__(self) -> float:
        import math

        return math.atan(float(self.t)) + self.h * math.pi / 2

    def __str__(self) -> str:
        return f"arctan({self.t}) + {self.h}*(pi/2)"


ZERO_ANGLE = NormalAngle(Fraction(0), 0)


def _fold_one(state: NormalAngle, y: Value) -> NormalAngle:
    s = state.t
    c = value_sign(s * y - 1)
    if c < 0:
        return NormalAngle(odot(s, y), state.h)
    if c > 0:
        return NormalAngle(odot(s, y), state.h + 2 * value_sign(s))
    return NormalAngle(Fraction(0), state.h + value_sign(s))


def fold_term(state: NormalAngle, coeff: int, arg) -> NormalAngle:
    """Fold coeff copies of arctan(arg) into the running normal form.

    Negative coefficients fold |coeff| copies of -arg, using the oddness of
    the arctangent.  Exact right angles are absorbed into the half-turn
    count, so folding is total.
    """
    arg = as_value(arg)
    y = arg if coeff >= 0 else -arg
    for _ in range(abs(coeff)):
        state = _fold_one(state, y)
    return state


def fold_terms(terms: Iterable[tuple[int, Value]]) -> NormalAngle:
    """Fold (coeff, arg) pairs from the zero angle."""
    state = ZERO_ANGLE
    for coeff, arg in terms:
        state = fold_term(state, coeff, arg)
    return state


@dataclass(frozen=True)
class OdotPolynomial:
    """Polynomial whose real roots are the n-th composition roots of x.

    coefficients[i] is the coefficient of z^i; the degree always equals the
    root order n.
    """

    coefficients: tuple[Value, ...]
    n: int
    x: Value

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, z) -> Value:
        z = as_value(z)
        acc: Value = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    def roots(self) -> tuple[Value, ...]:
        """Exact roots, available for degree <= 2 (quadratic formula).

        Roots of higher-order polynomials are generally not quadratic surds,
        so none are produced.
        """
        coeffs = list(self.coefficients)
        while coeffs and value_sign(coeffs[-1]) == 0:
            coeffs.pop()
        if len(coeffs) > 3:
            raise UnsupportedRadicalError(
                "roots are only extracted for degree <= 2"
            )
        if len(coeffs) <= 1:
            return ()
        if len(coeffs) == 2:
            c0, c1 = coeffs
            return (-c0 / c1,)
        c0, c1, c2 = coeffs
        disc = c1 * c1 - 4 * c2 * c0
        root = value_sqrt(disc)  # raises if outside the field
        return ((-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2))


def root_poly(n: int, x) -> OdotPolynomial:
    """Polynomial in z with z^(*n) = x: x*u_n(z) + v_n(z) for even n,
    x*v_n(z) - u_n(z) for odd n, coefficients expanded binomially."""
    x = as_value(x)
    if n < 1:
        raise ValueError("n must be a positive integer")
    if isinstance(x, Fraction) and abs(x) == 1:
        raise DegenerateArgumentError("x = +-1 is excluded")
    # Coefficient lists of u_n(z) and v_n(z), index = power of z.
    import math as _math

    u = [Fraction(0)] * (n + 1)
    v = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        sign = -1 if k & 1 else 1
        u[n - 2 * k] = Fraction(sign * _math.comb(n, 2 * k))
        if 2 * k + 1 <= n:
            v[n - 2 * k - 1] = Fraction(sign * _math.comb(n, 2 * k + 1))
    if n % 2 == 0:
        coeffs = tuple(x * uc + vc for uc, vc in zip(u, v))
    else:
        coeffs = tuple(x * vc - uc for uc, vc in zip(u, v))
    return OdotPolynomial(coeffs, n, x)
