"""Exact and numeric verdicts for arctangent identities.

The exact path folds the left side into a NormalAngle and compares it with
the angle named by the right side; it is authoritative.  The numeric path
re-evaluates everything in interval fixed-point and checks the residual
against a digit budget; it exists to catch bugs in the exact path and to
handle right sides off the quarter-pi lattice, and it reports
``indeterminate`` instead of guessing when the residual falls in the gray
zone between clearly-zero and clearly-nonzero.

The numeric path needs pi.  It takes it from 5*A(1/7) + 2*A(3/79) = pi/4,
which the exact fold proves before the first numeric verdict is issued, so
the two routes stay independent: no numeric result feeds the exact path.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from fractions import Fraction

from .fixedpoint import FixedPointContext, Interval, pi_interval
from .generator import ArctanTerm, Identity
from .odot import NormalAngle

__all__ = ["Verdict", "verify_exact", "verify_numeric", "DEFAULT_GUARD"]

DEFAULT_GUARD = 5
_GUARD_ENV = "ARCTAN_FORGE_GUARD"


@dataclass(frozen=True)
class Verdict:
    holds: bool
    actual: NormalAngle
    claimed_rhs: Fraction
    numeric_residual: str | None = None
    indeterminate: bool = False


def verify_exact(identity: Identity) -> Verdict:
    """Fold the left side; holds iff it names the same angle as rhs*pi.

    Raises UnsupportedRhsError when tan(rhs*pi) leaves the supported
    quadratic fields (rhs denominators other than 1, 2, 3, 4, 6, 8, 12).
    """
    actual = identity.fold()
    target = NormalAngle.from_pi_multiple(identity.rhs)
    return Verdict(actual.same_angle(target), actual, identity.rhs)


def _guard_digits() -> int:
    raw = os.environ.get(_GUARD_ENV)
    if raw is None:
        return DEFAULT_GUARD
    try:
        g = int(raw)
    except ValueError:
        raise ValueError(f"{_GUARD_ENV} must be an integer, got {raw!r}") from None
    if g < 1:
        raise ValueError(f"{_GUARD_ENV} must be positive, got {g}")
    return g


@functools.cache
def _bootstrap_pi_identity() -> None:
    euler = Identity(
        (ArctanTerm(5, Fraction(1, 7)), ArctanTerm(2, Fraction(3, 79))),
        Fraction(1, 4),
    )
    if euler.fold().to_pi_multiple() != Fraction(1, 4):
        raise RuntimeError("the pi bootstrap identity failed its exact check")


def _sci(n: int, wp: int) -> str:
    """Scientific-notation string of n/10**wp without float underflow."""
    if n == 0:
        return "0"
    sign = "-" if n < 0 else ""
    s = str(abs(n))
    exp = len(s) - 1 - wp
    mant = s[0] if len(s) == 1 else s[0] + "." + s[1:6]
    return f"{sign}{mant}e{exp:+d}"


def verify_numeric(identity: Identity, digits: int) -> Verdict:
    """Interval evaluation of LHS - rhs*pi at `digits` decimal digits.

    holds iff the residual is certainly below 10**(-digits+g); a residual
    certainly above 10**(-g) refutes; anything in between (or an enclosure
    too wide to tell) comes back holds=False, indeterminate=True, and the
    caller may retry with more digits.  g is 5 unless ARCTAN_FORGE_GUARD
    overrides it.
    """
    if digits < 10:
        raise ValueError("digits must be at least 10")
    _bootstrap_pi_identity()
    g = _guard_digits()
    wp = digits + g + 15
    ctx = FixedPointContext(wp)
    total: Interval = (0, 0)
    for term in identity.terms:
        arm = ctx.atan(ctx.from_value(term.arg))
        total = ctx.add(total, ctx.mul_int(arm, term.coeff))
    rhs_iv = ctx.mul(pi_interval(wp), ctx.from_fraction(identity.rhs))
    residual = ctx.sub(total, rhs_iv)

    if residual[0] <= 0 <= residual[1]:
        mag_lo = 0
    else:
        mag_lo = min(abs(residual[0]), abs(residual[1]))
    mag_hi = max(abs(residual[0]), abs(residual[1]))
    hold_bound = 10 ** (wp - digits + g)
    noise_bound = 10 ** (wp - g)
    if mag_hi < hold_bound:
        holds, indeterminate = True, False
    elif mag_lo >= noise_bound:
        holds, indeterminate = False, False
    else:
        holds, indeterminate = False, True

    mid = (residual[0] + residual[1]) // 2
    rad = (residual[1] - residual[0] + 1) // 2
    report = f"{_sci(mid, wp)} +/- {_sci(rad, wp)}"
    return Verdict(holds, identity.fold(), identity.rhs, report, indeterminate)
