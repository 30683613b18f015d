"""Exact arithmetic over the rationals and real quadratic fields Q(sqrt(d)).

A *Value* is either a :class:`fractions.Fraction` or a :class:`Surd`
``a + b*sqrt(d)`` with rational ``a``, ``b`` and squarefree integer
``d >= 2``.  Canonical form is enforced everywhere: radicands are reduced
to their squarefree core, and a surd whose irrational part vanishes is
demoted to a plain ``Fraction``.  Equal values therefore always have equal
representations, and equality/hashing are structural.

Values are immutable and every operation is a pure function, so the whole
module is safe for unrestricted concurrent use.  Mixing two different
radicands in one expression raises :class:`IncompatibleFieldError` rather
than silently extending to a degree-4 field.  Signs and comparisons are
decided by exact integer case analysis, never by floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    IncompatibleFieldError,
    InvalidRadicandError,
    UnsupportedRadicalError,
)

__all__ = [
    "Surd",
    "Value",
    "as_value",
    "surd_normalize",
    "value_sign",
    "value_conj",
    "value_sqrt",
    "value_to_float",
]


def _squarefree_decompose(d: int) -> tuple[int, int]:
    """Write d >= 1 as s*s*core with core squarefree; return (s, core)."""
    s, core = 1, 1
    r = math.isqrt(d)
    if r * r == d:
        return r, 1
    f = 2
    while f * f <= d:
        if d % f == 0:
            e = 0
            while d % f == 0:
                d //= f
                e += 1
            s *= f ** (e // 2)
            if e & 1:
                core *= f
        f += 1 if f == 2 else 2
    return s, core * d


@dataclass(frozen=True)
class Surd:
    """The exact real number a + b*sqrt(d).

    Instances must already be canonical: d squarefree and >= 2, b != 0.
    Use :func:`surd_normalize` to build a Value from raw (a, b, d) data.
    Arithmetic accepts ints, Fractions and Surds over the same d, and
    demotes to Fraction whenever the sqrt(d) part cancels.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.d < 2:
            raise InvalidRadicandError(f"radicand must be >= 2, got {self.d}")
        _, core = _squarefree_decompose(self.d)
        if core != self.d:
            raise InvalidRadicandError(
                f"radicand {self.d} is not squarefree; use surd_normalize()"
            )
        if self.b == 0:
            raise InvalidRadicandError("b = 0 is rational; use surd_normalize()")

    # -- field arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "Surd | Fraction | None":
        if isinstance(other, Surd):
            if other.d != self.d:
                raise IncompatibleFieldError(
                    f"cannot mix sqrt({self.d}) with sqrt({other.d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return None

    def __add__(self, other) -> Value:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if isinstance(other, Fraction):
            return Surd(self.a + other, self.b, self.d)
        return _make(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b, self.d)

    def __pos__(self) -> "Surd":
        return self

    def __sub__(self, other) -> Value:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Value:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (-self) + other

    def __mul__(self, other) -> Value:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if isinstance(other, Fraction):
            if other == 0:
                return Fraction(0)
            return Surd(self.a * other, self.b * other, self.d)
        return _make(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Surd":
        # 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d); the norm is
        # never zero because sqrt(d) is irrational and b != 0.
        norm = self.a * self.a - self.b * self.b * self.d
        return Surd(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other) -> Value:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if isinstance(other, Fraction):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Surd(self.a / other, self.b / other, self.d)
        return self * other.inverse()

    def __rtruediv__(self, other) -> Value:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> Value:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result: Value = Fraction(1)
        for _ in range(n):
            result = result * self
        return result

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b, self.d)

    # -- order --------------------------------------------------------------

    def sign(self) -> int:
        sa = _fraction_sign(self.a)
        sb = _fraction_sign(self.b)
        if sa == sb or sa == 0:
            return sb
        if sb == 0:
            return sa
        # Opposite signs: compare a^2 against b^2 d.  Equality would force
        # sqrt(d) rational, impossible for squarefree d >= 2.
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def _cmp(self, other) -> int:
        diff = self - other
        return value_sign(diff)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self) -> "Surd":
        return self if self.sign() >= 0 else -self

    def __bool__(self) -> bool:
        return True  # canonical surds are irrational, hence nonzero

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        return f"surd({self.a},{self.b},{self.d})"


Value = Union[Fraction, Surd]


def _fraction_sign(q: Fraction) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


def _make(a: Fraction, b: Fraction, d: int) -> Value:
    """Assemble a + b*sqrt(d) assuming d is already squarefree."""
    if b == 0 or d == 1:
        return a + b
    return Surd(a, b, d)


def as_value(x) -> Value:
    """Coerce ints and Fractions to a Value; reject inexact types."""
    if isinstance(x, Surd):
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"not an exact value: {x!r}")


def surd_normalize(a, b, d: int) -> Value:
    """Canonicalize a + b*sqrt(d): extract square factors of d, demote if rational.

    d must be a positive integer; a and b rational.
    """
    if not isinstance(d, int) or d <= 0:
        raise InvalidRadicandError(f"radicand must be a positive integer, got {d!r}")
    a, b = Fraction(a), Fraction(b)
    s, core = _squarefree_decompose(d)
    return _make(a, b * s, core)


def value_sign(x: Value) -> int:
    """Exact sign in {-1, 0, +1}, decided without floating point."""
    if isinstance(x, Surd):
        return x.sign()
    return _fraction_sign(Fraction(x))


def value_conj(x: Value) -> Value:
    """Field conjugate: flips the sign of the sqrt(d) part; identity on rationals."""
    if isinstance(x, Surd):
        return x.conjugate()
    return Fraction(x)


def _fraction_sqrt(q: Fraction) -> Fraction | None:
    """Exact rational square root of q >= 0, or None."""
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def value_sqrt(x: Value) -> Value:
    """Square root of a nonnegative Value, if it exists as a Value.

    For rational x the result always exists (a Fraction or a Surd).  For a
    surd x the root must live in the same field Q(sqrt(d)); otherwise
    UnsupportedRadicalError is raised.
    """
    if value_sign(x) < 0:
        raise UnsupportedRadicalError("negative radicand")
    if isinstance(x, Surd):
        # Solve (c + e*sqrt(d))^2 = a + b*sqrt(d) over the rationals:
        # c^2 + e^2 d = a and 2ce = b, so c^2 is a root of 4t^2 - 4at + b^2 d.
        disc = _fraction_sqrt(x.a * x.a - x.b * x.b * x.d)
        if disc is not None:
            for c2 in ((x.a + disc) / 2, (x.a - disc) / 2):
                c = _fraction_sqrt(c2)
                if c is None or c == 0:
                    continue
                for cc in (c, -c):
                    e = x.b / (2 * cc)
                    if cc * cc + e * e * x.d == x.a:
                        root = _make(cc, e, x.d)
                        if value_sign(root) >= 0:
                            return root
        raise UnsupportedRadicalError(
            f"sqrt of {x} does not lie in Q(sqrt({x.d}))"
        )
    q = Fraction(x)
    if q == 0:
        return Fraction(0)
    exact = _fraction_sqrt(q)
    if exact is not None:
        return exact
    # sqrt(p/q) = sqrt(p*q)/q with p*q > 0
    return surd_normalize(0, Fraction(1, q.denominator), q.numerator * q.denominator)


def value_to_float(x: Value) -> float:
    """Lossy float view, for diagnostics only."""
    return float(x)
