"""Symbolic statements about the three-point sum, checked exactly.

Each statement is a pair of rational expressions in ``x1..x3, y1..y3, a, b``.
A statement holds when ``lhs - rhs`` has a numerator whose curve normal
form is zero (or that is zero outright, when curve relations are off).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..errors import ZeroDenominator
from .polynomial import PolyRing, SparsePolynomial, curve_normal_form
from .rational import RationalExpression, relation_reducer

RING3 = PolyRing(3)


def det_symbolic(matrix):
    """Laplace expansion along the first row; entries may be polynomials or
    rational expressions."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * det_symbolic(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


@dataclass(frozen=True)
class SymbolicTriple:
    """Coefficient polynomials and the composed chord additions."""

    V: SparsePolynomial
    c0: SparsePolynomial
    c1: SparsePolynomial
    c2: SparsePolynomial
    alpha: RationalExpression
    x_mid: RationalExpression
    y_mid: RationalExpression
    alpha_tilde: RationalExpression
    x4: RationalExpression
    y4: RationalExpression


def symbolic_coefficients(ring: PolyRing = RING3):
    x = [ring.x(i) for i in (1, 2, 3)]
    y = [ring.y(i) for i in (1, 2, 3)]
    sq = [xi * xi for xi in x]
    one = ring.one
    V = det_symbolic([[one, x[i], sq[i]] for i in range(3)])
    c0 = det_symbolic([[x[i], sq[i], y[i]] for i in range(3)])
    c1 = -det_symbolic([[one, sq[i], y[i]] for i in range(3)])
    c2 = det_symbolic([[one, x[i], y[i]] for i in range(3)])
    return V, c0, c1, c2


def symbolic_triple(use_curve_relations: bool) -> SymbolicTriple:
    ring = RING3
    red = relation_reducer(use_curve_relations)

    def lift(f):
        return RationalExpression.lift(f, red)

    x1, x2, x3 = (lift(ring.x(i)) for i in (1, 2, 3))
    y1, y2, y3 = (lift(ring.y(i)) for i in (1, 2, 3))
    alpha = (y2 - y1) / (x2 - x1)
    x_mid = alpha * alpha - x1 - x2
    y_mid = -y1 - alpha * (x_mid - x1)
    alpha_tilde = (y3 - y_mid) / (x3 - x_mid)
    x4 = alpha_tilde * alpha_tilde - x_mid - x3
    y4 = -y3 - alpha_tilde * (x4 - x3)
    V, c0, c1, c2 = symbolic_coefficients(ring)
    return SymbolicTriple(V, c0, c1, c2, alpha, x_mid, y_mid, alpha_tilde, x4, y4)


def check_identity(
    lhs: RationalExpression, rhs: RationalExpression, use_curve_relations: bool
) -> bool:
    """True iff ``lhs == rhs`` as rational functions (on the curve, if asked).

    The difference is taken over the lcm of the factored denominators, which
    has the same zero test as cross-multiplying numerators and denominators.
    """
    for side in (lhs, rhs):
        for f in side.factors:
            g = curve_normal_form(f) if use_curve_relations else f
            if g.is_zero():
                raise ZeroDenominator(f"denominator factor {f} vanishes")
    num = (lhs - rhs).num
    if use_curve_relations:
        num = curve_normal_form(num)
    return num.is_zero()


def eq2(use_curve_relations: bool = False):
    """``c1 + (x1 + x2) c2 == (x1 - x3)(x3 - x2)(y1 - y2)``."""
    ring = RING3
    red = relation_reducer(use_curve_relations)
    _, _, c1, c2 = symbolic_coefficients(ring)
    x1, x2, x3 = (ring.x(i) for i in (1, 2, 3))
    lhs = c1 + (x1 + x2) * c2
    rhs = (x1 - x3) * (x3 - x2) * (ring.y(1) - ring.y(2))
    return RationalExpression.lift(lhs, red), RationalExpression.lift(rhs, red)


def lemma(use_curve_relations: bool = True):
    """``c2 (alpha + alpha_tilde) == V`` for the two chord slopes."""
    t = symbolic_triple(use_curve_relations)
    red = relation_reducer(use_curve_relations)
    lhs = RationalExpression.lift(t.c2, red) * (t.alpha + t.alpha_tilde)
    return lhs, RationalExpression.lift(t.V, red)


def theorem2_x(use_curve_relations: bool = True):
    t = symbolic_triple(use_curve_relations)
    red = relation_reducer(use_curve_relations)
    ring = RING3
    V, c1, c2 = (RationalExpression.lift(f, red) for f in (t.V, t.c1, t.c2))
    s = RationalExpression.lift(ring.x(1) + ring.x(2) + ring.x(3), red)
    rhs = (V * V - 2 * c1 * c2) / (c2 * c2) - s
    return t.x4, rhs


def theorem2_y(use_curve_relations: bool = True):
    """Composed ``y4`` against ``-(c2 x4^2 + c1 x4 + c0) / V`` at the composed ``x4``."""
    t = symbolic_triple(use_curve_relations)
    red = relation_reducer(use_curve_relations)
    V, c0, c1, c2 = (RationalExpression.lift(f, red) for f in (t.V, t.c0, t.c1, t.c2))
    x4 = t.x4
    rhs = -(c2 * x4 * x4 + c1 * x4 + c0) / V
    return t.y4, rhs


def detm3(use_curve_relations: bool = True):
    """The 4x4 matrix with rows ``(1, x_i, x_i^2, y_i)`` and ``(1, x4, x4^2, -y4)``
    has zero determinant."""
    t = symbolic_triple(use_curve_relations)
    red = relation_reducer(use_curve_relations)
    ring = RING3

    def lift(f):
        return RationalExpression.lift(f, red)

    rows = []
    for i in (1, 2, 3):
        x, y = ring.x(i), ring.y(i)
        rows.append([lift(ring.one), lift(x), lift(x * x), lift(y)])
    rows.append([lift(ring.one), t.x4, t.x4 * t.x4, -t.y4])
    # expand along the last row; the 3x3 minors are plain polynomials
    det = None
    for j in range(4):
        minor = [[e.num for k, e in enumerate(r) if k != j] for r in rows[:3]]
        term = rows[3][j] * lift(det_symbolic(minor))
        if (3 + j) % 2:
            term = -term
        det = term if det is None else det + term
    return det, lift(ring.zero)


@dataclass(frozen=True)
class Statement:
    name: str
    build: Callable[[bool], tuple[RationalExpression, RationalExpression]]
    use_curve_relations: bool


STATEMENTS = {
    "eq2": Statement("eq2", eq2, False),
    "lemma": Statement("lemma", lemma, True),
    "theorem2_x": Statement("theorem2_x", theorem2_x, True),
    "theorem2_y": Statement("theorem2_y", theorem2_y, True),
    "detm3": Statement("detm3", detm3, True),
}


def prove_exact(name: str, use_curve_relations: bool | None = None) -> bool:
    st = STATEMENTS[name]
    flag = st.use_curve_relations if use_curve_relations is None else use_curve_relations
    lhs, rhs = st.build(flag)
    return check_identity(lhs, rhs, flag)
