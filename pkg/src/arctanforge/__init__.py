"""Exact arctangent identities for pi: generation, verification, digits.

The package works over exact values only: big rationals and quadratic
surds a + b*sqrt(d).  Identities of the form

    c_1*arctan(t_1) + ... + c_r*arctan(t_r) = rhs*pi

are produced by several generator families, proved or refuted by an exact
angle fold with winding counts, cross-checked by rigorous interval
arithmetic, and (for rational arguments) turned into pi digit runs by
binary splitting.
"""

from .engine import (
    DigitResult,
    SplitNode,
    atan_series_split,
    lehmer_measure,
    pi_digits,
)
from .errors import (
    ArctanForgeError,
    DegenerateArgumentError,
    DegenerateIdentityError,
    IdentitySyntaxError,
    IncompatibleFieldError,
    InconsistentInputError,
    InvalidRadicandError,
    RationalOnlyError,
    ReductionRequiredError,
    RightAngleError,
    UnsupportedRadicalError,
    UnsupportedRhsError,
)
from .generator import (
    ArctanTerm,
    Identity,
    WindingInput,
    diff_identity,
    golden_family,
    half_turn,
    machin_pair,
    quad_reduce,
    winding_correction,
    winding_correction_literal,
)
from .odot import (
    NormalAngle,
    OdotPolynomial,
    ZERO_ANGLE,
    fold_term,
    fold_terms,
    odot,
    odot_pow,
    odot_pow_reciprocal,
    root_poly,
)
from .sequences import (
    RecurrenceSpec,
    UVPair,
    fibonacci,
    lucas,
    min_poly_phi_power,
    phi_power,
    uv_closed,
    uv_pair,
    w_eval,
)
from .textio import (
    IdentityDocument,
    format_document,
    format_identity,
    format_value,
    identity_from_dict,
    identity_to_dict,
    parse_document,
    parse_identity,
    parse_value,
)
from .values import (
    Surd,
    Value,
    as_value,
    surd_normalize,
    value_conj,
    value_sign,
    value_sqrt,
    value_to_float,
)
from .verifier import Verdict, verify_exact, verify_numeric

__version__ = "0.1.0"

__all__ = [
    "ArctanForgeError",
    "ArctanTerm",
    "DegenerateArgumentError",
    "DegenerateIdentityError",
    "DigitResult",
    "Identity",
    "IdentityDocument",
    "IdentitySyntaxError",
    "IncompatibleFieldError",
    "InconsistentInputError",
    "InvalidRadicandError",
    "NormalAngle",
    "OdotPolynomial",
    "RationalOnlyError",
    "RecurrenceSpec",
    "ReductionRequiredError",
    "RightAngleError",
    "SplitNode",
    "Surd",
    "UVPair",
    "UnsupportedRadicalError",
    "UnsupportedRhsError",
    "Value",
    "Verdict",
    "WindingInput",
    "ZERO_ANGLE",
    "as_value",
    "atan_series_split",
    "diff_identity",
    "fibonacci",
    "fold_term",
    "fold_terms",
    "format_document",
    "format_identity",
    "format_value",
    "golden_family",
    "half_turn",
    "identity_from_dict",
    "identity_to_dict",
    "lehmer_measure",
    "lucas",
    "machin_pair",
    "min_poly_phi_power",
    "odot",
    "odot_pow",
    "odot_pow_reciprocal",
    "parse_document",
    "parse_identity",
    "parse_value",
    "phi_power",
    "pi_digits",
    "quad_reduce",
    "root_poly",
    "surd_normalize",
    "uv_closed",
    "uv_pair",
    "value_conj",
    "value_sign",
    "value_sqrt",
    "value_to_float",
    "verify_exact",
    "verify_numeric",
    "w_eval",
    "winding_correction",
    "winding_correction_literal",
]
