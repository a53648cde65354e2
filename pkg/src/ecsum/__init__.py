"""Exact elliptic-curve group law with symmetric closed forms for sums of
three and of n points."""

__version__ = "0.1.0"

from .curve import O, CurveParams, Point, add, is_on_curve, negate, scalar_mul
from .errors import (
    ArityMismatch,
    BadPrime,
    DescriptorMismatch,
    DivisionByZero,
    NonGeneric,
    PointNotOnCurve,
    ZeroDenominator,
)
from .fields import QQ, FieldDescriptor, FieldValue, fe_arith, fe_inv, fe_sample
from .kernel import BACKEND
from .multisum import (
    SumCofactors,
    SumMatrix,
    cofactors,
    iterated_sum,
    multisum,
    multisum_x,
    multisum_y,
    verify_vanishing,
)
from .linalg import det_exact
from .symsum3 import (
    SlopePair,
    TripleCoefficients,
    parabola_coeffs,
    slope_sum,
    sum3_symmetric,
    triple_coeffs,
)

__all__ = [
    "BACKEND",
    "O",
    "QQ",
    "ArityMismatch",
    "BadPrime",
    "CurveParams",
    "DescriptorMismatch",
    "DivisionByZero",
    "FieldDescriptor",
    "FieldValue",
    "NonGeneric",
    "Point",
    "PointNotOnCurve",
    "SlopePair",
    "SumCofactors",
    "SumMatrix",
    "TripleCoefficients",
    "ZeroDenominator",
    "add",
    "cofactors",
    "det_exact",
    "fe_arith",
    "fe_inv",
    "fe_sample",
    "is_on_curve",
    "iterated_sum",
    "multisum",
    "multisum_x",
    "multisum_y",
    "negate",
    "parabola_coeffs",
    "scalar_mul",
    "slope_sum",
    "sum3_symmetric",
    "triple_coeffs",
    "verify_vanishing",
]
