import importlib
import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecsum import _pykernel, kernel

from conftest import leibniz_det

try:
    _ckernel = importlib.import_module("ecsum._ckernel")
except ImportError:
    _ckernel = None

needs_ext = pytest.mark.skipif(_ckernel is None, reason="compiled kernel not built")

PRIMES = [5, 7, 10007, 1000003, (1 << 31) - 1, (1 << 61) - 1, 9223372036854775783]
BIG = (1 << 127) - 1  # above the native limit


def test_backend_reported():
    assert kernel.BACKEND in ("cython", "python")


@pytest.mark.parametrize("p", PRIMES + [BIG])
def test_python_det_against_leibniz(p):
    rng = random.Random(p)
    for n in range(1, 6):
        rows = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        assert _pykernel.det_mod(rows, p) == leibniz_det(rows) % p


@pytest.mark.parametrize("p", PRIMES + [BIG])
def test_python_ec_add_formulas(p):
    # chord through (0, 1) and (2, 3) on y^2 = x^3 + 1 reduces mod p
    case, x, y = _pykernel.ec_add(0, 1, 2, 3, 0, p)
    assert (case, x, y) == (1, p - 1, 0)
    assert _pykernel.ec_add(0, 1, 0, p - 1, 0, p)[0] == 3
    assert _pykernel.ec_add(2, 3, 2, 3, 0, p) == (2, 0, 1)


@needs_ext
@settings(max_examples=400, deadline=None)
@given(
    st.sampled_from(PRIMES + [BIG]),
    st.lists(st.integers(min_value=0), min_size=5, max_size=5),
)
def test_ec_add_backends_agree(p, raw):
    x1, y1, x2, y2, a = (v % p for v in raw)
    for args in [(x1, y1, x2, y2, a), (x1, y1, x1, y2, a), (x1, y1, x1, y1, a), (x1, y1, x1, (-y1) % p, a)]:
        try:
            expected = _pykernel.ec_add(*args, p)
        except ValueError:  # y1 = 0 with y2 != 0: not a pair of points on one curve
            continue
        assert _ckernel.ec_add(*args, p) == expected


@needs_ext
@settings(max_examples=200, deadline=None)
@given(st.sampled_from(PRIMES + [BIG]), st.integers(1, 9), st.randoms(use_true_random=False))
def test_det_and_minors_backends_agree(p, n, rnd):
    rows = [[rnd.randrange(p) for _ in range(n)] for _ in range(n)]
    if rnd.random() < 0.3 and n > 1:
        rows[-1] = list(rows[0])
    assert _ckernel.det_mod(rows, p) == _pykernel.det_mod(rows, p)
    wide = [[rnd.randrange(p) for _ in range(n + 1)] for _ in range(n)]
    assert _ckernel.minors_mod(wide, p) == _pykernel.minors_mod(wide, p)


@needs_ext
@pytest.mark.parametrize("p", PRIMES)
def test_inv_backends_agree(p):
    rng = random.Random(p)
    for _ in range(200):
        a = rng.randrange(1, p)
        assert _ckernel.inv_mod(a, p) == _pykernel.inv_mod(a, p)
        assert a * _ckernel.inv_mod(a, p) % p == 1
    with pytest.raises(ZeroDivisionError):
        _ckernel.inv_mod(0, p)


def test_pure_python_env_switch():
    code = "import ecsum.kernel as k; print(k.BACKEND)"
    env = dict(os.environ, ECSUM_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
