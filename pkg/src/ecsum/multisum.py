"""Closed-form coordinates of ``P1 + ... + Pn`` from determinant cofactors.

The ``(n+1) x (n+1)`` matrix ``M`` has rows

    1, x_i, ..., x_i^h, y_i, x_i y_i, ..., x_i^(k-1) y_i        (i <= n)
    1, x,   ..., x^h,   -y,  -x y,    ..., -x^(k-1) y            (last row)

with ``h = ceil(n/2)`` and ``k = floor(n/2)``. Its determinant vanishes at
the sum ``(x, y)``. Expanding along the last row gives coefficients
``c_l = (-1)^l det M_(l+1)`` that depend only on the inputs; the tail of the
list is aliased as ``d_l = c_(l + h + 1)``, with ``d_(-1) = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .curve import CHORD, O, CurveParams, Point, _require_on_curve, add_with_case
from .errors import DescriptorMismatch, NonGeneric
from .fields import FieldDescriptor, FieldValue
from .linalg import det_exact, signed_minors


def _split(n: int) -> tuple[int, int]:
    """Number of x-power columns and y columns for n points."""
    return 1 + (n + 1) // 2, n // 2


def _common_field(points: Sequence[Point]) -> FieldDescriptor:
    if not points:
        raise ValueError("need at least one point")
    field = None
    for P in points:
        if P.is_infinity:
            raise NonGeneric("affine", "closed forms need affine points, got O")
        if field is None:
            field = P.x.field
        elif P.x.field != field:
            raise DescriptorMismatch(f"points over {field} and {P.x.field}")
    return field


def _row(x: FieldValue, y: FieldValue, nx: int, ny: int) -> list[FieldValue]:
    powers = [x.field.one]
    for _ in range(max(nx, ny) - 1):
        powers.append(powers[-1] * x)
    return powers[:nx] + [p * y for p in powers[:ny]]


@dataclass(frozen=True)
class SumMatrix:
    n: int
    entries: tuple[tuple[FieldValue, ...], ...]

    @classmethod
    def build(cls, points: Sequence[Point], p_next: Point) -> SumMatrix:
        n = len(points)
        if n < 2:
            raise ValueError("the sum matrix needs n >= 2 points")
        _common_field(list(points) + [p_next])
        nx, ny = _split(n)
        rows = [tuple(_row(P.x, P.y, nx, ny)) for P in points]
        rows.append(tuple(_row(p_next.x, -p_next.y, nx, ny)))
        return cls(n, tuple(rows))

    def det(self) -> FieldValue:
        return det_exact(self.entries)


@dataclass(frozen=True)
class SumCofactors:
    n: int
    c: tuple[FieldValue, ...]

    @property
    def half(self) -> int:
        return (self.n + 1) // 2

    def d(self, l: int) -> FieldValue:
        """``c[l + ceil(n/2) + 1]``; ``d(-1)`` is zero."""
        if l == -1:
            return self.c[0].field.zero
        if not 0 <= l < self.n // 2:
            raise IndexError(f"d index {l} out of range for n={self.n}")
        return self.c[l + self.half + 1]


def cofactors(points: Sequence[Point]) -> SumCofactors:
    n = len(points)
    if n < 2:
        raise ValueError("cofactors need n >= 2 points")
    _common_field(points)
    nx, ny = _split(n)
    rows = [_row(P.x, P.y, nx, ny) for P in points]
    return SumCofactors(n, tuple(signed_minors(rows)))


def _x_from_cofactors(points: Sequence[Point], cof: SumCofactors) -> FieldValue:
    n = cof.n
    if len({P.x for P in points}) < n:
        # some pure-x cofactor is then a Vandermonde with a repeated row
        raise NonGeneric("distinct x", "input x-coordinates repeat")
    c, d = cof.c, cof.d
    if n % 2 == 0:
        m = n // 2
        num = c[m] * c[m] - 2 * d(m - 1) * d(m - 2)
        den = d(m - 1) * d(m - 1)
    else:
        m = (n + 1) // 2
        num = d(m - 2) * d(m - 2) - 2 * c[m] * c[m - 1]
        den = c[m] * c[m]
    if den.is_zero():
        raise NonGeneric("leading cofactor != 0", f"x-denominator vanishes for n={n}")
    total = points[0].x
    for P in points[1:]:
        total = total + P.x
    return num / den - total


def _y_from_cofactors(cof: SumCofactors, x: FieldValue) -> FieldValue:
    num = x.field.zero
    for coeff in reversed(cof.c[: cof.half + 1]):
        num = num * x + coeff
    den = x.field.zero
    for l in reversed(range(cof.n // 2)):
        den = den * x + cof.d(l)
    if den.is_zero():
        raise NonGeneric("y-denominator != 0", "y-denominator vanishes at x_(n+1)")
    return num / den


def multisum_x(points: Sequence[Point]) -> FieldValue:
    return _x_from_cofactors(points, cofactors(points))


def multisum_y(points: Sequence[Point], x_next: FieldValue) -> FieldValue:
    cof = cofactors(points)
    if x_next.field != cof.c[0].field:
        raise DescriptorMismatch("x_next lives in a different field")
    return _y_from_cofactors(cof, x_next)


def iterated_sum_with_cases(points: Sequence[Point], E: CurveParams) -> tuple[Point, list[str]]:
    """Left fold ``((P1 + P2) + P3) + ...`` and the case used at each step."""
    for P in points:
        _require_on_curve(P, E)
    S = O
    cases = []
    for i, P in enumerate(points):
        if i == 0:
            S = P
            continue
        case, S = add_with_case(S, P, E, check=False)
        cases.append(case)
    return S, cases


def iterated_sum(points: Sequence[Point], E: CurveParams) -> Point:
    return iterated_sum_with_cases(points, E)[0]


def check_generic(points: Sequence[Point], E: CurveParams) -> Point:
    """Raise NonGeneric unless every fold step is a chord and the sum is affine.

    Returns the folded sum.
    """
    S, cases = iterated_sum_with_cases(points, E)
    for step, case in enumerate(cases, start=2):
        if case != CHORD:
            raise NonGeneric(
                "chord fold", f"fold step {step} uses case {case}, not a chord"
            )
    if S.is_infinity:
        raise NonGeneric("sum != O", "the points sum to O")
    return S


def multisum(points: Sequence[Point], E: CurveParams) -> Point:
    """``P1 + ... + Pn`` from the cofactor closed form (generic inputs only)."""
    if len(points) < 2:
        raise ValueError("multisum needs n >= 2 points")
    check_generic(points, E)
    cof = cofactors(points)
    x = _x_from_cofactors(points, cof)
    return Point(x, _y_from_cofactors(cof, x))


def multisum_with_cofactors(points: Sequence[Point], E: CurveParams) -> tuple[Point, SumCofactors]:
    check_generic(points, E)
    cof = cofactors(points)
    x = _x_from_cofactors(points, cof)
    return Point(x, _y_from_cofactors(cof, x)), cof


def verify_vanishing(points: Sequence[Point], p_next: Point) -> bool:
    """True iff the sum matrix with ``p_next`` in the last row is singular."""
    return SumMatrix.build(points, p_next).det().is_zero()
