import random
from fractions import Fraction

import pytest

from ecsum.errors import DescriptorMismatch
from ecsum.fields import QQ
from ecsum.linalg import bareiss, det_exact, signed_minors

from conftest import F5, F10007, leibniz_det


def test_identity_4x4():
    eye = [[QQ(int(i == j)) for j in range(4)] for i in range(4)]
    assert det_exact(eye) == QQ(1)


@pytest.mark.parametrize("field", [QQ, F10007], ids=str)
@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_repeated_row_is_singular(field, n):
    rng = random.Random(n)
    rows = [[field(rng.randrange(-50, 50)) for _ in range(n)] for _ in range(n)]
    rows[n - 1] = rows[0]
    assert det_exact(rows).is_zero()


@pytest.mark.parametrize("field", [QQ, F10007], ids=str)
def test_vandermonde_matches_factored_form(field):
    rng = random.Random(4)
    for _ in range(100):
        x1, x2, x3 = (field(rng.randrange(-1000, 1000)) for _ in range(3))
        rows = [[field.one, x, x * x] for x in (x1, x2, x3)]
        assert det_exact(rows) == (x1 - x2) * (x2 - x3) * (x3 - x1)


@pytest.mark.parametrize("field", [QQ, F10007], ids=str)
@pytest.mark.parametrize("n", range(1, 8))
def test_against_leibniz(field, n):
    rng = random.Random(100 + n)
    for _ in range(5 if n > 5 else 20):
        rows = [
            [field(Fraction(rng.randint(-30, 30), rng.randint(1, 9))) for _ in range(n)]
            for _ in range(n)
        ]
        assert det_exact(rows) == leibniz_det(rows)


def test_bareiss_integer():
    rng = random.Random(9)
    for n in range(1, 7):
        m = [[rng.randint(-99, 99) for _ in range(n)] for _ in range(n)]
        assert bareiss(m) == leibniz_det(m)
    assert bareiss([[0, 1], [1, 0]]) == -1
    assert bareiss([[0, 0], [1, 2]]) == 0


def test_multilinear_and_alternating():
    rng = random.Random(3)
    n = 5
    rows = [[QQ(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
    d = det_exact(rows)
    swapped = [rows[1], rows[0]] + rows[2:]
    assert det_exact(swapped) == -d
    scaled = [[v * 7 for v in rows[0]]] + rows[1:]
    assert det_exact(scaled) == 7 * d


def test_mixed_fields_rejected():
    with pytest.raises(DescriptorMismatch):
        det_exact([[F5(1), QQ(0)], [QQ(0), QQ(1)]])


@pytest.mark.parametrize("field", [QQ, F10007], ids=str)
def test_signed_minors(field):
    rng = random.Random(6)
    n = 4
    rows = [[field(rng.randint(-20, 20)) for _ in range(n + 1)] for _ in range(n)]
    got = signed_minors(rows)
    for l in range(n + 1):
        minor = [r[:l] + r[l + 1:] for r in rows]
        expected = leibniz_det(minor)
        assert got[l] == (expected if l % 2 == 0 else -expected)
