import itertools
import random

import pytest

from ecsum.curve import CurveParams
from ecsum.fields import QQ, FieldDescriptor

F5 = FieldDescriptor.prime(5)
F10007 = FieldDescriptor.prime(10007)
F1000003 = FieldDescriptor.prime(1000003)


def leibniz_det(rows):
    """Determinant as a signed sum over permutations; test oracle only."""
    n = len(rows)
    total = rows[0][0] * 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = rows[0][0] * 0 + 1
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total - term if inversions % 2 else total + term
    return total


@pytest.fixture
def f5_curve():
    return CurveParams.build(F5, 1, 1)


@pytest.fixture
def f5_triple(f5_curve):
    return [f5_curve.point(0, 1), f5_curve.point(2, 1), f5_curve.point(4, 2)]


@pytest.fixture
def torsion_curve():
    """y^2 = x^3 + 1 over Q, where (2, 3) has order 6."""
    return CurveParams.build(QQ, 0, 1)


@pytest.fixture
def rng():
    return random.Random(12345)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, label = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {label}")
