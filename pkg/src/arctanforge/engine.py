"""Binary-splitting pi digits from rational Machin-like identities.

arctan(p/q) = Sum_j a_j with a_0 = p/q and a_j / a_(j-1) =
-p^2 (2j-1) / (q^2 (2j+1)), a ratio of small integers, so the partial sum
over [0, N) is computed exactly as T/Q by the classic product tree:

    P(a,b) = P(a,m) * P(m,b)
    Q(a,b) = Q(a,m) * Q(m,b)
    T(a,b) = T(a,m) * Q(m,b) + P(a,m) * T(m,b)

The truncation index N comes from the alternating-series tail bound
(|p|/q)^(2N+1) / (2N+1) < 10^-D, so the only inexactness in a digit run is
one floor division per arctangent.  Digit strings are truncated, never
rounded; a run whose guard region is all nines or all zeros cannot prove
its last digit and is retried with a wider guard before being flagged.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateArgumentError,
    DegenerateIdentityError,
    InconsistentInputError,
    RationalOnlyError,
    ReductionRequiredError,
)
from .generator import Identity
from .values import Surd
from .verifier import verify_exact

__all__ = [
    "SplitNode",
    "DigitResult",
    "atan_series_split",
    "pi_digits",
    "lehmer_measure",
]

SPLIT_GUARD = 10


@dataclass(frozen=True)
class SplitNode:
    """Exact partial-sum state for a term range [a, b): sum = T/Q."""

    P: int
    Q: int
    T: int

    def combine(self, right: "SplitNode") -> "SplitNode":
        return SplitNode(
            self.P * right.P,
            self.Q * right.Q,
            self.T * right.Q + self.P * right.T,
        )


@dataclass(frozen=True)
class DigitResult:
    digits: str
    count: int
    source: Identity
    elapsed: float
    unrounded: bool = False


def _base_node(j: int, p: int, q: int) -> SplitNode:
    if j == 0:
        return SplitNode(p, q, p)
    pj = -p * p * (2 * j - 1)
    qj = q * q * (2 * j + 1)
    return SplitNode(pj, qj, pj)


def _split(p: int, q: int, a: int, b: int) -> SplitNode:
    if b - a == 1:
        return _base_node(a, p, q)
    m = (a + b) // 2
    return _split(p, q, a, m).combine(_split(p, q, m, b))


def _term_count(p: int, q: int, decimals: int) -> int:
    # smallest N with (|p|/q)^(2N+1)/(2N+1) < 10^-decimals, log-estimated
    # then adjusted in exact integers (the estimate can land on either side)
    n = max(1, math.ceil(decimals / (2 * math.log10(q / abs(p)))))
    tenp = 10**decimals
    ap = abs(p)

    def tail_small(k: int) -> bool:
        return tenp * ap ** (2 * k + 1) < (2 * k + 1) * q ** (2 * k + 1)

    while not tail_small(n):
        n += 1
    while n > 1 and tail_small(n - 1):
        n -= 1
    return n


def atan_series_split(p: int, q: int, digits: int) -> int:
    """floor(arctan(p/q) * 10**digits) for |p/q| < 1, by binary splitting.

    The return value is the floor of the exact partial sum, whose distance
    from arctan(p/q) is below 10**-(digits + 10).
    """
    if q == 0:
        raise ZeroDivisionError("q must be nonzero")
    if q < 0:
        p, q = -p, -q
    g = math.gcd(p, q)
    if g > 1:
        p, q = p // g, q // g
    if p == 0:
        return 0
    if abs(p) >= q:
        raise ReductionRequiredError(
            f"|{p}/{q}| >= 1: reduce via arctan(t) = sign(t)*pi/2 - arctan(1/t)"
        )
    node = _split(p, q, 0, _term_count(p, q, digits + SPLIT_GUARD))
    return node.T * 10**digits // node.Q


def _eliminate_halves(
    identity: Identity,
) -> tuple[list[tuple[int, Fraction]], Fraction]:
    """Rewrite so every argument satisfies |t| < 1.

    arctan(t) = sign(t)*pi/2 - arctan(1/t) moves half-turns to the right
    side; arctan(+-1) = +-pi/4 moves whole quarter-turns.  Returns the
    surviving (coeff, arg) terms and the adjusted rhs multiple of pi.
    """
    work: list[tuple[int, Fraction]] = []
    offset = Fraction(0)
    for term in identity.terms:
        c, t = term.coeff, Fraction(term.arg)
        if t == 0:
            continue
        s = 1 if t > 0 else -1
        if abs(t) == 1:
            offset += Fraction(c * s, 4)
            continue
        if abs(t) > 1:
            offset += Fraction(c * s, 2)
            c, t = -c, 1 / t
        work.append((c, t))
    return work, identity.rhs - offset


def _run_digits(work, rprime: Fraction, digits: int, guard: int) -> tuple[str, bool]:
    scale_digits = digits + guard
    acc = 0
    for c, t in work:
        acc += c * atan_series_split(t.numerator, t.denominator, scale_digits)
    pi_scaled = acc * rprime.denominator // rprime.numerator
    s = str(pi_scaled)
    if len(s) != scale_digits + 1 or s[0] != "3":
        raise InconsistentInputError(
            "identity does not evaluate to pi at the claimed rhs"
        )
    guard_region = s[1 + digits :]
    ambiguous = guard_region in (("9" * guard), ("0" * guard))
    return "3." + s[1 : 1 + digits], ambiguous


def pi_digits(identity: Identity, digits: int) -> DigitResult:
    """pi to `digits` truncated decimals via (sum c_i*arctan(t_i)) / rhs."""
    if digits < 1:
        raise ValueError("digits must be positive")
    start = time.perf_counter()
    for term in identity.terms:
        if isinstance(term.arg, Surd):
            raise RationalOnlyError(
                f"surd argument {term.arg} is not accepted by the digit engine"
            )
    if identity.rhs == 0:
        raise DegenerateIdentityError("rhs = 0 determines no value of pi")
    if not verify_exact(identity).holds:
        raise InconsistentInputError("identity fails exact verification")
    work, rprime = _eliminate_halves(identity)
    if rprime == 0:
        raise DegenerateIdentityError(
            "pi cancels out after half-turn elimination"
        )
    text, ambiguous = "", True
    for guard in (SPLIT_GUARD, 3 * SPLIT_GUARD, 9 * SPLIT_GUARD):
        text, ambiguous = _run_digits(work, rprime, digits, guard)
        if not ambiguous:
            break
    return DigitResult(
        digits=text,
        count=digits,
        source=identity,
        elapsed=time.perf_counter() - start,
        unrounded=ambiguous,
    )


def lehmer_measure(identity: Identity) -> float:
    """Sum of 1/log10(1/|t'|) over terms, |t'| <= 1 after reciprocal
    normalization; math.inf when any |t'| = 1.  Smaller means faster."""
    total = 0.0
    for term in identity.terms:
        if isinstance(term.arg, Surd):
            raise RationalOnlyError("the measure is defined for rational terms")
        t = Fraction(term.arg)
        if t == 0:
            raise DegenerateArgumentError("arctan(0) contributes no digits")
        p, q = abs(t.numerator), t.denominator
        if p > q:
            p, q = q, p
        if p == q:
            return math.inf
        total += 1.0 / (math.log10(q) - math.log10(p))
    return total
