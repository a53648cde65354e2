"""Randomized property suites over the group law and the closed forms.

Every trial draws from its own ``random.Random(f"{seed}:{trial}")`` so any
single failing trial can be replayed from its index.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .curve import (
    MORDELL17,
    CurveParams,
    Point,
    add,
    add_with_case,
    is_on_curve,
    negate,
    random_curve,
    random_point,
    rational_corpus,
)
from .errors import NonGeneric
from .fields import FieldDescriptor
from .multisum import (
    cofactors,
    iterated_sum,
    multisum,
    multisum_x,
    multisum_y,
    verify_vanishing,
)
from .symsum3 import (
    check_generic as check_generic3,
    on_parabola,
    parabola_coeffs,
    slope_sum,
    sum3_from_coeffs,
    triple_coeffs,
)

MAX_RESAMPLE = 1000
MAX_FAILURES_REPORTED = 20


class PointSource:
    """Draws curves and points: a fixed curve or a random curve per trial over
    F_p, or the y^2 = x^3 + 17 corpus over Q."""

    def __init__(self, field: FieldDescriptor, curve: CurveParams | None = None):
        self.field = field
        self.curve = curve
        self._corpus = None
        if not field.is_prime_field:
            if curve is None:
                self.curve = MORDELL17
            elif curve != MORDELL17:
                raise ValueError("over Q only y^2 = x^3 + 17 has a point generator")
            self._corpus = rational_corpus()

    def draw_curve(self, rng: random.Random) -> CurveParams:
        return self.curve if self.curve is not None else random_curve(self.field, rng)

    def draw_point(self, E: CurveParams, rng: random.Random) -> Point:
        if self._corpus is not None:
            return rng.choice(self._corpus)
        return random_point(E, rng)

    def draw(self, n: int, rng: random.Random) -> tuple[CurveParams, list[Point]]:
        E = self.draw_curve(rng)
        return E, [self.draw_point(E, rng) for _ in range(n)]


def generic_sample(
    source: PointSource, n: int, rng: random.Random, check: Callable | None = None
) -> tuple[CurveParams, list[Point]]:
    """Redraw until ``check(points, E)`` accepts.

    The default accepts exactly the inputs on which :func:`multisum` is
    defined: a chord-only fold and nonvanishing cofactor denominators.
    """
    check = check or multisum
    for _ in range(MAX_RESAMPLE):
        E, pts = source.draw(n, rng)
        if n > 1 and len({P.x for P in pts}) < n:
            continue
        try:
            check(pts, E)
        except NonGeneric:
            continue
        return E, pts
    raise NonGeneric("sample", f"no generic {n}-point sample after {MAX_RESAMPLE} draws")


def generic_triple(source: PointSource, rng: random.Random):
    return generic_sample(source, 3, rng, lambda pts, E: check_generic3(*pts, E))


@dataclass
class SuiteReport:
    suite: str
    field: str
    curve: str
    seed: int
    trials: int = 0
    passed: int = 0
    failed: int = 0
    cases: Counter = dc_field(default_factory=Counter)
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.trials > 0

    def record(self, trial: int, ok: bool, detail: str = ""):
        self.trials += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < MAX_FAILURES_REPORTED:
                self.failures.append({"trial": trial, "detail": detail})

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "field": self.field,
            "curve": self.curve,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "failed": self.failed,
            "cases": dict(sorted(self.cases.items())),
            "failures": sorted(self.failures, key=lambda f: f["trial"]),
            "result": "pass" if self.ok else "fail",
        }


def _trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def _report(suite: str, source: PointSource, seed: int) -> SuiteReport:
    curve = str(source.curve) if source.curve is not None else f"{source.field},random"
    return SuiteReport(suite, str(source.field), curve, seed)


ASSOC_CONFIGS = ("random", "random", "random", "random", "P2=P1", "P3=P1", "P3=-P1", "P3=-(P1+P2)")


def assoc_trial(source: PointSource, rng: random.Random, config: str, cases: Counter | None = None):
    """One associativity trial; returns ``(ok, detail)``.

    For ``P3 = -P1`` with both chord preconditions met, the sum must also
    equal ``P2``.
    """
    E, (P1, P2) = source.draw(2, rng)
    if config == "P2=P1":
        P2 = P1
        P3 = source.draw_point(E, rng)
    elif config == "P3=P1":
        P3 = P1
    elif config == "P3=-P1":
        P3 = negate(P1)
    elif config == "P3=-(P1+P2)":
        P3 = negate(add(P1, P2, E))
    else:
        P3 = source.draw_point(E, rng)

    def tracked(P, Q):
        case, R = add_with_case(P, Q, E, check=False)
        if cases is not None:
            cases[case] += 1
        return R

    L = tracked(tracked(P1, P2), P3)
    R = tracked(P1, tracked(P2, P3))
    if not (is_on_curve(L, E) and is_on_curve(R, E)):
        return False, "result off the curve"
    if L != R:
        return False, f"(P1+P2)+P3={L} but P1+(P2+P3)={R} for {P1},{P2},{P3} on {E}"
    if config == "P3=-P1" and P1.x != P2.x:
        S = add(P1, P2, E, check=False)
        if not S.is_infinity and S.x != P3.x and L != P2:
            return False, f"P3=-P1 branch gave {L}, expected P2={P2}"
    return True, ""


def run_assoc(source: PointSource, trials: int, seed: int) -> SuiteReport:
    report = _report("assoc", source, seed)
    for t in range(trials):
        config = ASSOC_CONFIGS[t % len(ASSOC_CONFIGS)]
        report.cases["config:" + config] += 1
        ok, detail = assoc_trial(source, _trial_rng(seed, t), config, report.cases)
        report.record(t, ok, detail)
    return report


def sum3_trial(source: PointSource, rng: random.Random, permutations: bool = True):
    E, pts = generic_triple(source, rng)
    P1, P2, P3 = pts
    expected = add(add(P1, P2, E, check=False), P3, E, check=False)
    coeffs = triple_coeffs(P1, P2, P3)
    got = sum3_from_coeffs(pts, coeffs)
    if got != expected:
        return False, f"closed form {got} != iterated {expected}"
    V, c0, c1, c2 = coeffs
    if c2.is_zero():
        return False, "c2 = 0 on a generic triple"
    alpha, alpha_tilde = slope_sum(P1, P2, P3, E)
    if c2 * (alpha + alpha_tilde) != V:
        return False, "c2 (alpha + alpha~) != V"
    if not on_parabola(parabola_coeffs(P1, P2, P3), got.x, -got.y):
        return False, "(x4, -y4) is off the parabola"
    if permutations:
        # the hypotheses are not symmetric (P2+P3 may equal ±P1), so compare
        # the formula itself on every ordering
        for perm in itertools.permutations(pts):
            if sum3_from_coeffs(perm, triple_coeffs(*perm)) != got:
                return False, f"permutation {perm} changes the sum"
    return True, ""


def run_sum3(source: PointSource, trials: int, seed: int) -> SuiteReport:
    report = _report("sum3", source, seed)
    for t in range(trials):
        ok, detail = sum3_trial(source, _trial_rng(seed, t))
        report.record(t, ok, detail)
    return report


def multisum_trial(source: PointSource, n: int, rng: random.Random):
    E, pts = generic_sample(source, n, rng)
    expected = iterated_sum(pts, E)
    got = multisum(pts, E)
    if got != expected:
        return False, f"n={n}: closed form {got} != iterated {expected}"
    shuffled = list(pts)
    rng.shuffle(shuffled)
    x = multisum_x(shuffled)
    if Point(x, multisum_y(shuffled, x)) != got:
        return False, f"n={n}: permuted input changes the sum"
    if n == 3:
        V = triple_coeffs(*pts).V
        if cofactors(pts).c[3] != -V:
            return False, "c3 != -V"
    return True, ""


def vanishing_trial(source: PointSource, n: int, rng: random.Random):
    E, pts = generic_sample(source, n, rng)
    S = iterated_sum(pts, E)
    if not verify_vanishing(pts, S):
        return False, f"n={n}: det M != 0 at the iterated sum"
    return True, ""


def _run_per_n(name, trial_fn, source, trials, seed, ns: Sequence[int]) -> SuiteReport:
    report = _report(name, source, seed)
    t = 0
    for n in ns:
        for _ in range(trials):
            ok, detail = trial_fn(source, n, _trial_rng(seed, t))
            report.cases[f"n={n}"] += 1
            report.record(t, ok, detail)
            t += 1
    return report


def run_multisum(source: PointSource, trials: int, seed: int, ns: Sequence[int] = range(2, 9)) -> SuiteReport:
    return _run_per_n("multisum", multisum_trial, source, trials, seed, ns)


def run_vanishing(source: PointSource, trials: int, seed: int, ns: Sequence[int] = range(2, 9)) -> SuiteReport:
    return _run_per_n("vanishing", vanishing_trial, source, trials, seed, ns)


SUITES = {
    "assoc": run_assoc,
    "sum3": run_sum3,
    "multisum": run_multisum,
    "vanishing": run_vanishing,
}
