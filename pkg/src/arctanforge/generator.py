"""Families of exact arctangent identities for pi.

Each generator returns an :class:`Identity` whose right side is recomputed
by the exact fold rather than copied from a closed-form display: several of
the classical displays silently assume the winding correction k is zero,
and the fold is what actually decides it.

Families:

* ``machin_pair``: n*A(1/x) + A((u_n - v_n)/(u_n + v_n)) = (1/4 + k)*pi,
  the two-term family parametrized over n and x with winding k(n, x).
* ``quad_reduce``: 2*A(1/alpha) + A(1/y) = (1/4 + k)*pi for a quadratic
  irrational alpha, where y = (t^2 + 2t - 1)/(t^2 - 2t - 1) is collapsed
  modulo alpha's minimal polynomial t^2 - h*t + kq before evaluating.
* ``golden_family``: the golden-mean and Lucas-number specializations.
* ``half_turn``: 2*A(-x +- sqrt(1 + x^2)) + A(x) = +-pi/2.
* ``diff_identity``: A(f) - A((f - 1)/(f + 1)) = pi/4 or -3*pi/4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateArgumentError,
    IncompatibleFieldError,
    InconsistentInputError,
    RightAngleError,
    UnsupportedRadicalError,
)
from .fixedpoint import FixedPointContext, pi_interval
from .odot import NormalAngle, fold_terms
from .sequences import lucas, phi_power, uv_pair
from .values import Surd, Value, as_value, value_sign, value_sqrt

__all__ = [
    "ArctanTerm",
    "Identity",
    "WindingInput",
    "machin_pair",
    "winding_correction",
    "winding_correction_literal",
    "quad_reduce",
    "golden_family",
    "half_turn",
    "diff_identity",
]

GOLDEN_KINDS = ("odd", "even", "lucas_minus", "lucas_plus", "only_lucas")


@dataclass(frozen=True)
class ArctanTerm:
    """One summand coeff*arctan(arg)."""

    coeff: int
    arg: Value

    def __post_init__(self):
        if self.coeff == 0:
            raise ValueError("zero coefficient")
        object.__setattr__(self, "arg", as_value(self.arg))


@dataclass(frozen=True)
class Identity:
    """Sum of arctangent terms claimed to equal rhs*pi.

    The claim is data, not a guarantee: the verifier decides it.  Every
    identity produced by this module's generators folds exactly to its rhs.
    """

    terms: tuple[ArctanTerm, ...]
    rhs: Fraction

    def __post_init__(self):
        if not self.terms:
            raise ValueError("an identity needs at least one term")
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    def fold(self) -> NormalAngle:
        return fold_terms((t.coeff, t.arg) for t in self.terms)


@dataclass(frozen=True)
class WindingInput:
    """Diagnostic record for the literal winding formula.

    T = |pi/4 - n*arctan(1/x)| / pi, carried as a midpoint of a rigorous
    enclosure; only floor(T) and the position of its fractional part
    relative to 1/2 matter.
    """

    n: int
    x: Value
    T: Fraction


def _rhs_from_fold(terms) -> Fraction:
    angle = fold_terms((t.coeff, t.arg) for t in terms)
    r = angle.to_pi_multiple()
    if r is None:
        raise RuntimeError(f"fold landed off the quarter-pi lattice: {angle}")
    return r


def _reject_unit(x: Value, who: str) -> None:
    if isinstance(x, Fraction) and abs(x) == 1:
        raise DegenerateArgumentError(f"{who} = +-1 is excluded")


def machin_pair(n: int, x) -> Identity:
    """n*A(1/x) + A((u_n - v_n)/(u_n + v_n)) with fold-computed rhs."""
    x = as_value(x)
    if n < 1:
        raise ValueError("n must be a positive integer")
    _reject_unit(x, "x")
    if value_sign(x) == 0:
        raise DegenerateArgumentError("x = 0 has no reciprocal argument")
    pair = uv_pair(n, x)
    total = pair.u + pair.v
    if value_sign(total) == 0:
        raise RightAngleError(f"u_{n} + v_{n} vanishes at x = {x}")
    terms = (ArctanTerm(n, 1 / x), ArctanTerm(1, (pair.u - pair.v) / total))
    return Identity(terms, _rhs_from_fold(terms))


def winding_correction(n: int, x) -> int:
    """The integer k with n*A(1/x) + A((u_n-v_n)/(u_n+v_n)) = pi/4 + k*pi.

    Computed by exact folding; :func:`winding_correction_literal` is the
    independent floating route and must agree.
    """
    k = machin_pair(n, x).rhs - Fraction(1, 4)
    if k.denominator != 1:
        raise RuntimeError(f"non-integer winding {k} for n={n}, x={x}")
    return int(k)


def _winding_literal_at(n: int, x: Value, wp: int) -> tuple[int, Fraction] | None:
    # One refinement pass; None means wp was too coarse to classify.
    ctx = FixedPointContext(wp)
    pi_iv = pi_interval(wp)
    na = ctx.mul_int(ctx.atan(ctx.from_value(1 / x)), n)
    diff = ctx.sub(na, ctx.div_int(pi_iv, 4))  # n*A(1/x) - pi/4
    if diff[1] < 0:
        sgn = -1
        absdiff = (-diff[1], -diff[0])
    elif diff[0] > 0:
        sgn = 1
        absdiff = diff
    else:
        return None
    T = ctx.div(absdiff, pi_iv)
    fl = T[0] // ctx.scale
    if T[1] // ctx.scale != fl:
        return None
    frac = (T[0] - fl * ctx.scale, T[1] - fl * ctx.scale)
    if 2 * frac[0] > ctx.scale:
        chi = 1
    elif 2 * frac[1] < ctx.scale:
        chi = 0
    else:
        return None
    return sgn * (fl + chi), Fraction(T[0] + T[1], 2 * ctx.scale)


def winding_correction_literal(n: int, x) -> int:
    """k via the characteristic-function formula
    sign(n*A(1/x) - pi/4) * (floor(T) + chi_(1/2,1)({T})),
    T = |pi/4 - n*A(1/x)|/pi, refined until the classification of T against
    the integer lattice and the point 1/2 is unambiguous.

    T is never exactly an integer or half-integer here (arctan of a
    rational or quadratic argument other than 0, +-1 is an irrational
    multiple of pi), so refinement terminates.
    """
    x = as_value(x)
    if n < 1:
        raise ValueError("n must be a positive integer")
    _reject_unit(x, "x")
    wp = 40
    while wp <= 40 * 2**12:
        hit = _winding_literal_at(n, x, wp)
        if hit is not None:
            return hit[0]
        wp *= 2
    raise RuntimeError(f"could not classify T for n={n}, x={x}")


def winding_input(n: int, x) -> WindingInput:
    """Diagnostic T alongside (n, x), from the literal route's enclosure."""
    x = as_value(x)
    wp = 40
    while True:
        hit = _winding_literal_at(n, x, wp)
        if hit is not None:
            return WindingInput(n, x, hit[1])
        wp *= 2


def quad_reduce(h: int, kq: int, alpha: Surd) -> Identity:
    """2*A(1/alpha) + A(1/y) at a root alpha of t^2 - h*t + kq.

    y = (t^2 + 2t - 1)/(t^2 - 2t - 1) is first reduced modulo the minimal
    polynomial, so numerator and denominator are the linear forms
    (h + 2)t - (1 + kq) and (h - 2)t - (1 + kq); the quotient collapses in
    the field and often lands in the rationals.
    """
    if not isinstance(alpha, Surd):
        raise InconsistentInputError("alpha must be a quadratic irrational")
    if value_sign(alpha * alpha - h * alpha + kq) != 0:
        raise InconsistentInputError(
            f"{alpha} is not a root of t^2 - {h}*t + {kq}"
        )
    num = (h + 2) * alpha - (1 + kq)  # x^2 + 2x - 1 reduced
    den = (h - 2) * alpha - (1 + kq)  # x^2 - 2x - 1 reduced
    if value_sign(num) == 0:
        raise RightAngleError("y = 0: the companion term is a right angle")
    terms = (ArctanTerm(2, 1 / alpha), ArctanTerm(1, den / num))
    return Identity(terms, _rhs_from_fold(terms))


def golden_family(kind: str, k: int) -> Identity:
    """Golden-mean and Lucas-number identity families, indexed by k >= 0.

    odd:         2*A(1/phi^(2k+1)) + A((L-2)/(L+2)) with L = L_(2k+1)
    even:        2*A(1/phi^(2k)) + A(reduced y), k >= 1
    lucas_minus: A(L/2) - 2*A(phi^(2k+1)) = -pi/2
    lucas_plus:  A(L/2) + 2*A(1/phi^(2k+1)) = pi/2
    only_lucas:  A(L/2) - A((L-2)/(L+2)) = pi/4
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if kind == "odd":
        m = 2 * k + 1
        return quad_reduce(lucas(m), -1, phi_power(m))
    if kind == "even":
        if k < 1:
            raise ValueError("the even family starts at k = 1")
        m = 2 * k
        return quad_reduce(lucas(m), 1, phi_power(m))
    if kind == "lucas_minus":
        m = 2 * k + 1
        terms = (
            ArctanTerm(1, Fraction(lucas(m), 2)),
            ArctanTerm(-2, phi_power(m)),
        )
        return Identity(terms, _rhs_from_fold(terms))
    if kind == "lucas_plus":
        m = 2 * k + 1
        terms = (
            ArctanTerm(1, Fraction(lucas(m), 2)),
            ArctanTerm(2, 1 / phi_power(m)),
        )
        return Identity(terms, _rhs_from_fold(terms))
    if kind == "only_lucas":
        return diff_identity(Fraction(lucas(2 * k + 1), 2))
    raise ValueError(f"unknown kind {kind!r}; expected one of {GOLDEN_KINDS}")


def half_turn(x) -> tuple[Identity, Identity]:
    """The pair 2*A(-x + r) + A(x) = pi/2 and 2*A(-x - r) + A(x) = -pi/2
    with r = sqrt(1 + x^2); requires the root to exist as a Value."""
    x = as_value(x)
    r = value_sqrt(1 + x * x)
    out = []
    try:
        for root in (r, -r):
            terms = (ArctanTerm(2, -x + root), ArctanTerm(1, x))
            out.append(Identity(terms, _rhs_from_fold(terms)))
    except IncompatibleFieldError:
        raise UnsupportedRadicalError(
            f"sqrt(1 + x^2) = {r} lies outside the field of x = {x}"
        ) from None
    return (out[0], out[1])


def diff_identity(f) -> Identity:
    """A(f) - A(g) for g = (f - 1)/(f + 1): pi/4 when f > -1, -3*pi/4 when
    f < -1 (the fold decides, consistent with limits at the pole)."""
    f = as_value(f)
    if value_sign(f + 1) == 0:
        raise DegenerateArgumentError("g is undefined at f = -1")
    g = (f - 1) / (f + 1)
    terms = (ArctanTerm(1, f), ArctanTerm(-1, g))
    return Identity(terms, _rhs_from_fold(terms))
