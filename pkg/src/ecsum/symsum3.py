"""Permutation-symmetric closed form for the sum of three points.

For affine points ``P1, P2, P3`` the coefficients are the 3x3 determinants

    V  = det[1, x_i, x_i^2]   = (x1 - x2)(x2 - x3)(x3 - x1)
    c0 = det[x_i, x_i^2, y_i]
    c1 = -det[1, x_i^2, y_i]
    c2 = det[1, x_i, y_i]

and in the generic configuration ``P4 = (P1 + P2) + P3`` has

    x4 = -x1 - x2 - x3 + (V^2 - 2 c1 c2) / c2^2
    y4 = -(c2 x4^2 + c1 x4 + c0) / V

Every coefficient is alternating in the three points, so both coordinates
are symmetric.
"""

from __future__ import annotations

from typing import NamedTuple

from .curve import CHORD, CurveParams, Point, _require_on_curve, add_with_case
from .errors import DescriptorMismatch, NonGeneric
from .fields import FieldValue


class TripleCoefficients(NamedTuple):
    V: FieldValue
    c0: FieldValue
    c1: FieldValue
    c2: FieldValue


class SlopePair(NamedTuple):
    alpha: FieldValue
    alpha_tilde: FieldValue


def _affine_coords(*points: Point):
    for P in points:
        if P.is_infinity:
            raise NonGeneric("affine", "closed forms need affine points, got O")
    field = points[0].x.field
    for P in points[1:]:
        if P.x.field != field:
            raise DescriptorMismatch(f"points over {field} and {P.x.field}")
    return [(P.x, P.y) for P in points]


def triple_coeffs(P1: Point, P2: Point, P3: Point) -> TripleCoefficients:
    """The four determinants, each written out as its cofactor expansion."""
    (x1, y1), (x2, y2), (x3, y3) = _affine_coords(P1, P2, P3)
    sq1, sq2, sq3 = x1 * x1, x2 * x2, x3 * x3
    V = (x1 - x2) * (x2 - x3) * (x3 - x1)
    c0 = (x2 * sq3 - x3 * sq2) * y1 + (x3 * sq1 - x1 * sq3) * y2 + (x1 * sq2 - x2 * sq1) * y3
    c1 = (sq2 - sq3) * y1 + (sq3 - sq1) * y2 + (sq1 - sq2) * y3
    c2 = (x3 - x2) * y1 + (x1 - x3) * y2 + (x2 - x1) * y3
    return TripleCoefficients(V, c0, c1, c2)


def check_generic(P1: Point, P2: Point, P3: Point, E: CurveParams) -> Point:
    """Raise NonGeneric unless both additions in (P1 + P2) + P3 are chords.

    Returns the intermediate point P1 + P2.
    """
    for P in (P1, P2, P3):
        _require_on_curve(P, E)
    (x1, _), (x2, _), (x3, _) = _affine_coords(P1, P2, P3)
    if x1 == x2:
        raise NonGeneric("P1 != ±P2", "P1 and P2 share an x-coordinate")
    if x2 == x3:
        raise NonGeneric("P2 != ±P3", "P2 and P3 share an x-coordinate")
    if x1 == x3:
        raise NonGeneric("P1 != ±P3", "P1 and P3 share an x-coordinate")
    _, S = add_with_case(P1, P2, E, check=False)
    if S.x == x3:
        hyp = "P1+P2 != P3" if S.y == P3.y else "P1+P2 != -P3"
        raise NonGeneric(hyp, f"P1 + P2 = {S} collides with P3 = {P3}")
    return S


def sum3_symmetric(P1: Point, P2: Point, P3: Point, E: CurveParams) -> Point:
    """``(P1 + P2) + P3`` from the symmetric closed form."""
    check_generic(P1, P2, P3, E)
    return sum3_from_coeffs((P1, P2, P3), triple_coeffs(P1, P2, P3))


def sum3_from_coeffs(points, coeffs: TripleCoefficients) -> Point:
    V, c0, c1, c2 = coeffs
    if V.is_zero():
        raise NonGeneric("V != 0", "x-coordinates are not pairwise distinct")
    # nonzero whenever the genericity checks pass; zero here is a bug
    assert not c2.is_zero(), "c2 vanished on a generic triple"
    x4 = -(points[0].x + points[1].x + points[2].x) + (V * V - 2 * c1 * c2) / (c2 * c2)
    y4 = -(c2 * x4 * x4 + c1 * x4 + c0) / V
    return Point(x4, y4)


def slope_sum(P1: Point, P2: Point, P3: Point, E: CurveParams) -> SlopePair:
    """Chord slopes of ``(P1, P2)`` and ``(P1 + P2, P3)``; they sum to V / c2."""
    S = check_generic(P1, P2, P3, E)
    pair = _slopes(P1, P2, P3, S)
    V, _, _, c2 = triple_coeffs(P1, P2, P3)
    assert not c2.is_zero(), "c2 vanished on a generic triple"
    assert c2 * (pair.alpha + pair.alpha_tilde) == V, "slope sum differs from V/c2"
    return pair


def _slopes(P1: Point, P2: Point, P3: Point, S: Point) -> SlopePair:
    alpha = (P2.y - P1.y) / (P2.x - P1.x)
    alpha_tilde = (P3.y - S.y) / (P3.x - S.x)
    return SlopePair(alpha, alpha_tilde)


def slope_sum_unchecked(P1: Point, P2: Point, P3: Point, E: CurveParams) -> SlopePair:
    """Slopes without the three-point hypotheses.

    Only needs ``x1 != x2`` and ``x3 != x(P1 + P2)``; this covers the
    configuration ``P3 = -P1``, where the slopes cancel.
    """
    if P1.x == P2.x:
        raise NonGeneric("P1 != ±P2")
    case, S = add_with_case(P1, P2, E)
    if S.is_infinity or S.x == P3.x:
        raise NonGeneric("P1+P2 != ±P3")
    return _slopes(P1, P2, P3, S)


def parabola_coeffs(P1: Point, P2: Point, P3: Point) -> tuple[FieldValue, FieldValue, FieldValue]:
    """Coefficients ``(u0, u1, u2)`` of the parabola y = u2 x^2 + u1 x + u0
    through the three points (Cramer's rule on the Vandermonde system)."""
    V, c0, c1, c2 = triple_coeffs(P1, P2, P3)
    if V.is_zero():
        raise NonGeneric("V != 0", "no unique parabola: repeated x-coordinate")
    inv = V.inverse()
    return c0 * inv, c1 * inv, c2 * inv


def on_parabola(u: tuple[FieldValue, FieldValue, FieldValue], x: FieldValue, y: FieldValue) -> bool:
    u0, u1, u2 = u
    return u2 * x * x + u1 * x + u0 == y


def iterated3(P1: Point, P2: Point, P3: Point, E: CurveParams) -> tuple[Point, bool]:
    """``(P1 + P2) + P3`` by two additions; the flag says both were chords."""
    case1, S = add_with_case(P1, P2, E)
    case2, R = add_with_case(S, P3, E)
    return R, case1 == CHORD and case2 == CHORD

