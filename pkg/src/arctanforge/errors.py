"""Exception hierarchy shared by all modules."""


class ArctanForgeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRadicandError(ArctanForgeError):
    """Radicand of a surd must be a positive integer."""


class IncompatibleFieldError(ArctanForgeError):
    """Arithmetic mixed two distinct quadratic fields (different radicands)."""


class UnsupportedRadicalError(ArctanForgeError):
    """A required square root does not exist inside a single quadratic field."""


class RightAngleError(ArctanForgeError):
    """The requested tangent is that of an odd multiple of pi/2."""


class DegenerateArgumentError(ArctanForgeError):
    """An argument sits on a singular point of the operation (e.g. x = +-1)."""


class InconsistentInputError(ArctanForgeError):
    """Inputs contradict each other (e.g. alpha is not a root of the given polynomial)."""


class UnsupportedRhsError(ArctanForgeError):
    """The right-hand side multiple of pi has no exactly representable tangent."""


class RationalOnlyError(ArctanForgeError):
    """The digit engine accepts rational arctangent arguments only."""


class DegenerateIdentityError(ArctanForgeError):
    """The identity pins no multiple of pi (rhs vanishes after reduction)."""


class ReductionRequiredError(ArctanForgeError):
    """Series evaluation requires |p/q| < 1; reduce the argument first."""


class IdentitySyntaxError(ArctanForgeError):
    """Malformed identity text.  Carries the 1-based column of the offence."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.message = message
        self.column = column
