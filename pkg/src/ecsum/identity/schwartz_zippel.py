"""Randomized identity testing over a large prime field.

A program maps ``(field, rng)`` to the value of a cleared identity at a
random point. Programs sample points on a random curve, so the curve
relations hold by construction. If the identity is a nonzero polynomial of
total degree ``D``, ``k`` passing trials happen with probability at most
``(D / p) ** k``.
"""

from __future__ import annotations

import random
from typing import Callable

from ..curve import CurveParams, Point, add_with_case, random_curve, random_point
from ..errors import NonGeneric
from ..fields import FieldDescriptor, FieldValue
from ..multisum import SumMatrix, check_generic, cofactors
from ..symsum3 import check_generic as check_generic3
from ..symsum3 import triple_coeffs

MERSENNE61 = (1 << 61) - 1
DEFAULT_TRIALS = 20
MAX_RETRIES = 200

Program = Callable[[FieldDescriptor, random.Random], FieldValue]


def sz_check(
    program: Program,
    trials: int = DEFAULT_TRIALS,
    prime: int = MERSENNE61,
    seed: int = 0,
    max_retries: int = MAX_RETRIES,
) -> bool:
    """True iff ``program`` evaluates to zero on every trial.

    A trial whose sample is non-generic is redrawn, up to ``max_retries``
    times.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    field = FieldDescriptor.prime(prime)
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        for _ in range(max_retries):
            try:
                value = program(field, rng)
            except NonGeneric:
                continue
            break
        else:
            raise NonGeneric("sample", f"no generic sample after {max_retries} draws")
        if not value.is_zero():
            return False
    return True


def zero_program(field: FieldDescriptor, rng: random.Random) -> FieldValue:
    return field.zero


def _points(n: int, field: FieldDescriptor, rng: random.Random) -> tuple[CurveParams, list[Point]]:
    E = random_curve(field, rng)
    return E, [random_point(E, rng) for _ in range(n)]


def detm_program(n: int, perturb: bool = False) -> Program:
    """``det M`` at the iterated sum of ``n`` random points.

    With ``perturb`` the determinant is instead expanded along its last row
    with 1 added to the constant cofactor, a negative control.
    """
    if n < 2:
        raise ValueError("detm needs n >= 2")

    def program(field, rng):
        E, pts = _points(n, field, rng)
        S = check_generic(pts, E)
        if not perturb:
            return SumMatrix.build(pts, S).det()
        cof = cofactors(pts)
        c = list(cof.c)
        c[0] = c[0] + 1
        half = cof.half
        acc = field.zero
        xp = field.one
        for l in range(half + 1):
            acc = acc + c[l] * xp
            xp = xp * S.x
        xp = field.one
        for l in range(n // 2):
            acc = acc - S.y * c[l + half + 1] * xp
            xp = xp * S.x
        return acc

    return program


def eq2_program(field, rng):
    # curve membership is not needed: points are arbitrary pairs
    x1, x2, x3, y1, y2, y3 = (field(rng.randrange(field.modulus)) for _ in range(6))
    c1 = (x2 * x2 - x3 * x3) * y1 + (x3 * x3 - x1 * x1) * y2 + (x1 * x1 - x2 * x2) * y3
    c2 = (x3 - x2) * y1 + (x1 - x3) * y2 + (x2 - x1) * y3
    return c1 + (x1 + x2) * c2 - (x1 - x3) * (x3 - x2) * (y1 - y2)


def _generic_triple(field, rng):
    E, (P1, P2, P3) = _points(3, field, rng)
    S = check_generic3(P1, P2, P3, E)
    return E, P1, P2, P3, S


def lemma_program(field, rng):
    E, P1, P2, P3, S = _generic_triple(field, rng)
    V, _, _, c2 = triple_coeffs(P1, P2, P3)
    alpha = (P2.y - P1.y) / (P2.x - P1.x)
    alpha_tilde = (P3.y - S.y) / (P3.x - S.x)
    return c2 * (alpha + alpha_tilde) - V


def theorem2_program(field, rng):
    """Residual of both closed-form coordinates against two chord additions."""
    E, P1, P2, P3, S = _generic_triple(field, rng)
    _, P4 = add_with_case(S, P3, E, check=False)
    V, c0, c1, c2 = triple_coeffs(P1, P2, P3)
    rx = P4.x - (-(P1.x + P2.x + P3.x) + (V * V - 2 * c1 * c2) / (c2 * c2))
    ry = V * P4.y + c2 * P4.x * P4.x + c1 * P4.x + c0
    # both vanish or the sum is nonzero with high probability
    return rx + ry * field(rng.randrange(1, field.modulus))


PROGRAMS: dict[str, Program] = {
    "eq2": eq2_program,
    "lemma": lemma_program,
    "theorem2": theorem2_program,
    "theorem2_x": theorem2_program,
    "theorem2_y": theorem2_program,
    "detm3": detm_program(3),
}


def program_for(name: str) -> Program:
    if name.startswith("detm:"):
        return detm_program(int(name.split(":", 1)[1]))
    return PROGRAMS[name]
