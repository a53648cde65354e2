"""Sparse multivariate polynomials with rational coefficients.

Variables are ordered ``x1..xn, y1..yn, a, b``. A monomial's exponent
vector is packed into one Python int, ``EXP_BITS`` bits per variable, so a
monomial product is a single integer addition.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Union

from ..errors import ArityMismatch

EXP_BITS = 16
EXP_MASK = (1 << EXP_BITS) - 1

Coeff = Union[int, Fraction]


def pack(exponents: Iterable[int]) -> int:
    m = 0
    for k, e in enumerate(exponents):
        if not 0 <= e <= EXP_MASK:
            raise OverflowError(f"exponent {e} out of range")
        m |= e << (EXP_BITS * k)
    return m


def unpack(m: int, arity: int) -> tuple[int, ...]:
    return tuple((m >> (EXP_BITS * k)) & EXP_MASK for k in range(arity))


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class PolyRing:
    """The variable set ``x1..xn, y1..yn, a, b`` for ``n`` points."""

    def __init__(self, npoints: int):
        if npoints < 1:
            raise ValueError("need at least one point")
        self.npoints = npoints
        self.arity = 2 * npoints + 2
        self.names = (
            [f"x{i}" for i in range(1, npoints + 1)]
            + [f"y{i}" for i in range(1, npoints + 1)]
            + ["a", "b"]
        )

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.npoints == self.npoints

    def __hash__(self):
        return hash(("PolyRing", self.npoints))

    def __repr__(self):
        return f"PolyRing({self.npoints})"

    def var_index(self, name: str) -> int:
        return self.names.index(name)

    def gen(self, index: int) -> SparsePolynomial:
        return SparsePolynomial(self, {1 << (EXP_BITS * index): 1})

    def x(self, i: int) -> SparsePolynomial:
        return self.gen(i - 1)

    def y(self, i: int) -> SparsePolynomial:
        return self.gen(self.npoints + i - 1)

    @property
    def a(self) -> SparsePolynomial:
        return self.gen(2 * self.npoints)

    @property
    def b(self) -> SparsePolynomial:
        return self.gen(2 * self.npoints + 1)

    def const(self, c: Coeff) -> SparsePolynomial:
        return SparsePolynomial(self, {0: c} if c else {})

    @property
    def zero(self) -> SparsePolynomial:
        return SparsePolynomial(self, {})

    @property
    def one(self) -> SparsePolynomial:
        return self.const(1)

    def y_shift(self, i: int) -> int:
        return EXP_BITS * (self.npoints + i - 1)

    def curve_rhs(self, i: int) -> SparsePolynomial:
        """``x_i^3 + a x_i + b``."""
        x = self.x(i)
        return x * x * x + self.a * x + self.b


class SparsePolynomial:
    """Immutable map from packed monomial to nonzero coefficient."""

    def __init__(self, ring: PolyRing, terms: Mapping[int, Coeff], _trusted: bool = False):
        self.ring = ring
        if _trusted:
            self.terms = terms
        else:
            self.terms = {m: _norm(c) for m, c in terms.items() if c}

    @classmethod
    def from_exponents(cls, ring: PolyRing, terms: Mapping[tuple[int, ...], Coeff]) -> SparsePolynomial:
        for exps in terms:
            if len(exps) != ring.arity:
                raise ArityMismatch(f"exponent vector {exps} has wrong length for {ring}")
        return cls(ring, {pack(e): c for e, c in terms.items()})

    def items(self) -> Iterator[tuple[tuple[int, ...], Coeff]]:
        """``(exponent_vector, coefficient)`` pairs."""
        for m, c in self.terms.items():
            yield unpack(m, self.ring.arity), c

    def _check(self, other) -> SparsePolynomial:
        if isinstance(other, SparsePolynomial):
            if other.ring != self.ring:
                raise ArityMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @cached_property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(unpack(m, self.ring.arity)) for m in self.terms)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        res = dict(self.terms)
        for m, c in other.terms.items():
            v = res.get(m, 0) + c
            if v:
                res[m] = _norm(v)
            else:
                res.pop(m, None)
        return SparsePolynomial(self.ring, res, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self.ring, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return self.ring.zero
        if self.total_degree + other.total_degree > EXP_MASK:
            raise OverflowError("product degree exceeds the packed exponent range")
        f, g = self.terms, other.terms
        if len(f) < len(g):
            f, g = g, f
        res: dict[int, Coeff] = {}
        get = res.get
        g_items = list(g.items())
        for m1, c1 in f.items():
            for m2, c2 in g_items:
                m = m1 + m2
                res[m] = get(m, 0) + c1 * c2
        return SparsePolynomial(self.ring, res)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: Coeff) -> SparsePolynomial:
        return SparsePolynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = self._hash = hash(frozenset(self.terms.items()))
        return h

    def evaluate(self, values, one=1):
        """Evaluate at ``values`` (one entry per variable, any ring elements)."""
        arity = self.ring.arity
        total = None
        for m, c in self.terms.items():
            term = one * c
            for k in range(arity):
                e = (m >> (EXP_BITS * k)) & EXP_MASK
                if e:
                    term = term * values[k] ** e
            total = term if total is None else total + term
        return one * 0 if total is None else total

    def y_degree(self) -> int:
        """Largest exponent of any y-variable."""
        ring = self.ring
        best = 0
        for m in self.terms:
            for i in range(1, ring.npoints + 1):
                best = max(best, (m >> ring.y_shift(i)) & EXP_MASK)
        return best

    def sort_key(self, m: int):
        """Graded order with y-variables compared first."""
        exps = unpack(m, self.ring.arity)
        n = self.ring.npoints
        ys = exps[n : 2 * n]
        return (sum(exps), tuple(reversed(ys)), tuple(reversed(exps[:n])), exps[2 * n :])

    def leading_term(self) -> tuple[tuple[int, ...], Coeff] | None:
        if not self.terms:
            return None
        m = max(self.terms, key=self.sort_key)
        return unpack(m, self.ring.arity), self.terms[m]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=self.sort_key, reverse=True):
            c = self.terms[m]
            exps = unpack(m, self.ring.arity)
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.ring.names, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"SparsePolynomial({self})"


def poly_arith(op: str, f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    if f.ring != g.ring:
        raise ArityMismatch(f"{f.ring} vs {g.ring}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")


def curve_normal_form(f: SparsePolynomial, order: Iterable[int] | None = None) -> SparsePolynomial:
    """Rewrite ``y_i^2 -> x_i^3 + a x_i + b`` until every y-degree is at most 1.

    ``order`` is the sequence of point indices to eliminate; the result does
    not depend on it.
    """
    ring = f.ring
    indices = list(order) if order is not None else range(1, ring.npoints + 1)
    terms = f.terms
    for i in indices:
        shift = ring.y_shift(i)
        rhs_powers = [ring.one]
        rhs_terms = None
        out: dict[int, Coeff] = {}
        get = out.get
        for m, c in terms.items():
            e = (m >> shift) & EXP_MASK
            if e < 2:
                out[m] = get(m, 0) + c
                continue
            q, r = divmod(e, 2)
            base = m - ((e - r) << shift)
            while len(rhs_powers) <= q:
                if rhs_terms is None:
                    rhs_terms = ring.curve_rhs(i)
                rhs_powers.append(rhs_powers[-1] * rhs_terms)
            for m2, c2 in rhs_powers[q].terms.items():
                key = base + m2
                out[key] = get(key, 0) + c * c2
        terms = {m: _norm(c) for m, c in out.items() if c}
    return SparsePolynomial(ring, terms, _trusted=True)
