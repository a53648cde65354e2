"""Rational expressions over a :class:`PolyRing`.

Denominators are kept factored (each factor scaled to leading coefficient
1), so sums use the lcm of the factor lists and a division cancels any
factor the two operands share structurally. No polynomial gcd is computed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

from ..errors import ZeroDenominator
from .polynomial import Coeff, PolyRing, SparsePolynomial, curve_normal_form

Reducer = Callable[[SparsePolynomial], SparsePolynomial]


def _monic(f: SparsePolynomial) -> tuple[Coeff, SparsePolynomial]:
    _, lc = f.leading_term()
    if lc == 1:
        return 1, f
    return lc, f.scale(Fraction(1) / lc)


class RationalExpression:
    """``num / prod(factor ** exp)``.

    ``reduce`` (curve normal form or None) is applied to every numerator and
    factor produced, so expressions stay in normal form when curve
    relations are in force.
    """

    def __init__(
        self,
        num: SparsePolynomial,
        factors: Mapping[SparsePolynomial, int] | None = None,
        reduce: Reducer | None = None,
    ):
        self.ring: PolyRing = num.ring
        self.reduce = reduce
        self.num = reduce(num) if reduce else num
        self.factors: dict[SparsePolynomial, int] = {}
        for f, e in (factors or {}).items():
            self._push_factor(f, e)

    def _push_factor(self, f: SparsePolynomial, e: int):
        if self.reduce:
            f = self.reduce(f)
        if f.is_zero():
            raise ZeroDenominator("denominator factor reduces to zero")
        if f.total_degree == 0:
            self.num = self.num.scale(Fraction(1) / f.terms[0] ** e)
            return
        lc, f = _monic(f)
        if lc != 1:
            self.num = self.num.scale(Fraction(1) / Fraction(lc) ** e)
        self.factors[f] = self.factors.get(f, 0) + e

    @classmethod
    def _raw(cls, num, factors, reduce):
        obj = object.__new__(cls)
        obj.ring = num.ring
        obj.reduce = reduce
        obj.num = num
        obj.factors = factors
        return obj

    @classmethod
    def lift(cls, f: SparsePolynomial, reduce: Reducer | None = None) -> RationalExpression:
        return cls(f, None, reduce)

    @property
    def den(self) -> SparsePolynomial:
        out = self.ring.one
        for f, e in self.factors.items():
            out = out * f**e
        return out

    def _coerce(self, other) -> RationalExpression:
        if isinstance(other, RationalExpression):
            return other
        if isinstance(other, SparsePolynomial):
            return RationalExpression(other, None, self.reduce)
        if isinstance(other, (int, Fraction)):
            return RationalExpression(self.ring.const(other), None, self.reduce)
        return NotImplemented

    def _red(self, f):
        return self.reduce(f) if self.reduce else f

    def _combine(self, other: RationalExpression, sign: int) -> RationalExpression:
        lcm = dict(self.factors)
        for f, e in other.factors.items():
            if lcm.get(f, 0) < e:
                lcm[f] = e
        left = self.num * _product(lcm, self.factors)
        right = other.num * _product(lcm, other.factors)
        num = left + right if sign > 0 else left - right
        return RationalExpression._raw(self._red(num), lcm, self.reduce)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._combine(self, -1)

    def __neg__(self):
        return RationalExpression._raw(-self.num, dict(self.factors), self.reduce)

    def _mul_parts(self, num, num_factors, den_factors):
        # cancel structurally equal factors before expanding anything
        den = dict(den_factors)
        keep = {}
        for f, e in num_factors.items():
            shared = min(e, den.get(f, 0))
            if shared:
                den[f] -= shared
                if not den[f]:
                    del den[f]
            if e - shared:
                keep[f] = e - shared
        num = num * _product(keep, {})
        return RationalExpression._raw(self._red(num), den, self.reduce)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = dict(self.factors)
        for f, e in other.factors.items():
            den[f] = den.get(f, 0) + e
        return self._mul_parts(self.num * other.num, {}, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        divisor = RationalExpression(other.num, None, self.reduce)
        if divisor.num.is_zero():
            raise ZeroDenominator("division by an expression that reduces to zero")
        inv = RationalExpression(self.ring.one, {other.num: 1}, self.reduce)
        den = dict(self.factors)
        for f, e in inv.factors.items():
            den[f] = den.get(f, 0) + e
        return self._mul_parts(self.num * inv.num, other.factors, den)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalExpression(self.ring.one, None, self.reduce) / self ** (-k)
        out = RationalExpression(self.ring.one, None, self.reduce)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        dens = " * ".join(f"({f})^{e}" for f, e in self.factors.items()) or "1"
        return f"RationalExpression(({self.num}) / {dens})"


def _product(target: Mapping[SparsePolynomial, int], have: Mapping[SparsePolynomial, int]):
    """Product of ``f ** (target[f] - have[f])`` over the target factors."""
    out = None
    for f, e in target.items():
        k = e - have.get(f, 0)
        if k:
            term = f**k
            out = term if out is None else out * term
    if out is None:
        ring = next(iter(target)).ring if target else None
        return 1 if ring is None else ring.one
    return out


def relation_reducer(enabled: bool) -> Reducer | None:
    return curve_normal_form if enabled else None
