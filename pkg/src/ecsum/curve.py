"""Weierstrass curves y^2 = x^3 + a*x + b and the chord-tangent group law.

:func:`add` is the ground truth that every closed-form formula in the
package is checked against. Over prime fields below 2**63 it runs on the
compiled kernel; elsewhere it uses :class:`~ecsum.fields.FieldValue`
arithmetic directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import kernel
from .errors import DescriptorMismatch, PointNotOnCurve, SingularCurve
from .fields import QQ, FieldDescriptor, FieldValue, sqrt_mod

# case labels reported by add_with_case
IDENTITY = "O"
CHORD = "I"
TANGENT = "II"
VERTICAL = "III"

_KERNEL_CASES = {kernel.CASE_CHORD: CHORD, kernel.CASE_TANGENT: TANGENT}


@dataclass(frozen=True)
class Point:
    """An affine point ``(x, y)``, or the point at infinity when both are None."""

    x: FieldValue | None = None
    y: FieldValue | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def field(self) -> FieldDescriptor | None:
        return None if self.x is None else self.x.field

    def __neg__(self) -> Point:
        return negate(self)

    def __str__(self) -> str:
        return "O" if self.x is None else f"({self.x},{self.y})"

    def __repr__(self) -> str:
        return f"Point{self}" if self.x is not None else "Point(O)"


O = Point()


def affine(field: FieldDescriptor, x, y) -> Point:
    return Point(field(x), field(y))


@dataclass(frozen=True)
class CurveParams:
    a: FieldValue
    b: FieldValue
    field: FieldDescriptor

    def __post_init__(self):
        if self.a.field != self.field or self.b.field != self.field:
            raise DescriptorMismatch("curve coefficients must live in the curve's field")
        if (4 * self.a**3 + 27 * self.b**2).is_zero():
            raise SingularCurve(f"4a^3 + 27b^2 = 0 for a={self.a}, b={self.b}")

    @classmethod
    def build(cls, field: FieldDescriptor, a, b) -> CurveParams:
        return cls(field(a), field(b), field)

    @classmethod
    def parse(cls, text: str) -> CurveParams:
        """Parse ``"<field>,a=<val>,b=<val>"``, e.g. ``"Fp:5,a=1,b=1"``."""
        field, coeffs = parse_curve_descriptor(text)
        if set(coeffs) != {"a", "b"}:
            raise ValueError(f"curve {text!r} needs both a= and b=")
        return cls.build(field, coeffs["a"], coeffs["b"])

    def point(self, x, y) -> Point:
        P = affine(self.field, x, y)
        if not is_on_curve(P, self):
            raise PointNotOnCurve(f"{P} is not on {self}")
        return P

    def rhs(self, x: FieldValue) -> FieldValue:
        return x * x * x + self.a * x + self.b

    def __str__(self) -> str:
        return f"{self.field},a={self.a},b={self.b}"


def parse_curve_descriptor(text: str) -> tuple[FieldDescriptor, dict[str, str]]:
    """Split a curve descriptor into its field and any ``key=value`` parts."""
    parts = [s.strip() for s in text.split(",") if s.strip()]
    if not parts:
        raise ValueError("empty curve descriptor")
    field = FieldDescriptor.parse(parts[0])
    coeffs = {}
    for part in parts[1:]:
        key, sep, val = part.partition("=")
        key = key.strip()
        if not sep or key not in ("a", "b") or key in coeffs:
            raise ValueError(f"bad curve coefficient {part!r}")
        coeffs[key] = val.strip()
    return field, coeffs


def _check_field(P: Point, E: CurveParams):
    if P.x is not None and P.x.field != E.field:
        raise DescriptorMismatch(f"point over {P.x.field} used with curve over {E.field}")


def is_on_curve(P: Point, E: CurveParams) -> bool:
    if P.is_infinity:
        return True
    _check_field(P, E)
    return P.y * P.y == E.rhs(P.x)


def negate(P: Point) -> Point:
    if P.is_infinity:
        return P
    return Point(P.x, -P.y)


def _require_on_curve(P: Point, E: CurveParams):
    if not is_on_curve(P, E):
        raise PointNotOnCurve(f"{P} is not on y^2 = x^3 + {E.a}x + {E.b} over {E.field}")


def _add_affine(P: Point, Q: Point, E: CurveParams) -> tuple[str, Point]:
    field = E.field
    if field.is_prime_field:
        case, x3, y3 = kernel.ec_add(
            P.x.value, P.y.value, Q.x.value, Q.y.value, E.a.value, field.modulus
        )
        if case == kernel.CASE_VERTICAL:
            return VERTICAL, O
        return _KERNEL_CASES[case], Point(FieldValue._make(field, x3), FieldValue._make(field, y3))
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 != x2:
        case = CHORD
        alpha = (y2 - y1) / (x2 - x1)
    elif (y1 + y2).is_zero():
        # also catches y1 = y2 = 0, where the tangent is vertical
        return VERTICAL, O
    else:
        case = TANGENT
        alpha = (3 * x1 * x1 + E.a) / (2 * y1)
    x3 = alpha * alpha - x1 - x2
    y3 = -y1 - alpha * (x3 - x1)
    return case, Point(x3, y3)


def add_with_case(P: Point, Q: Point, E: CurveParams, check: bool = True) -> tuple[str, Point]:
    """Add two points and report which rule applied (``O``, ``I``, ``II``, ``III``)."""
    if check:
        _require_on_curve(P, E)
        _require_on_curve(Q, E)
    if P.is_infinity:
        return IDENTITY, Q
    if Q.is_infinity:
        return IDENTITY, P
    return _add_affine(P, Q, E)


def add(P: Point, Q: Point, E: CurveParams, check: bool = True) -> Point:
    return add_with_case(P, Q, E, check)[1]


def scalar_mul(k: int, P: Point, E: CurveParams) -> Point:
    """``k * P`` by left-to-right double-and-add."""
    _require_on_curve(P, E)
    if k < 0:
        return negate(scalar_mul(-k, P, E))
    R = O
    for bit in bin(k)[2:]:
        R = add(R, R, E, check=False)
        if bit == "1":
            R = add(R, P, E, check=False)
    return R


def random_curve(field: FieldDescriptor, rng: random.Random) -> CurveParams:
    """A uniformly drawn nonsingular curve over a prime field."""
    if not field.is_prime_field:
        raise ValueError("random curves are only drawn over prime fields")
    p = field.modulus
    while True:
        a, b = rng.randrange(p), rng.randrange(p)
        if (4 * a**3 + 27 * b**2) % p:
            return CurveParams(FieldValue._make(field, a), FieldValue._make(field, b), field)


def random_point(E: CurveParams, rng: random.Random) -> Point:
    """Sample x until x^3 + ax + b is a square; take the smaller root."""
    if not E.field.is_prime_field:
        raise ValueError("random points are only drawn over prime fields")
    p = E.field.modulus
    a, b = E.a.value, E.b.value
    while True:
        x = rng.randrange(p)
        y = sqrt_mod((x * x * x + a * x + b) % p, p)
        if y is not None:
            return Point(FieldValue._make(E.field, x), FieldValue._make(E.field, y))


# integral points on y^2 = x^3 + 17
MORDELL17 = CurveParams.build(QQ, 0, 17)
MORDELL17_POINTS = ((-2, 3), (-1, 4), (2, 5), (4, 9), (8, 23))


def rational_corpus(max_multiple: int = 2) -> list[Point]:
    """Points of y^2 = x^3 + 17 over Q: the integral points, their negatives,
    small multiples, and pairwise sums of the integral points."""
    E = MORDELL17
    base = [E.point(x, y) for x, y in MORDELL17_POINTS]
    seen: dict[Point, None] = {}
    for P in base:
        for k in range(1, max_multiple + 1):
            for R in (scalar_mul(k, P, E), scalar_mul(-k, P, E)):
                seen.setdefault(R)
    for i, P in enumerate(base):
        for Q in base[i + 1:]:
            for R in (add(P, Q, E), add(P, negate(Q), E)):
                seen.setdefault(R)
    return [P for P in seen if not P.is_infinity]
