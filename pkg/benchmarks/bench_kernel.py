"""Compiled kernel vs. pure-Python fallback.

    python benchmarks/bench_kernel.py [--repeat 5]

Times the raw F_p kernels (chord/tangent addition, modular determinant,
signed minors) and one end-to-end sum3 run through the public API.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from ecsum import _pykernel

try:
    from ecsum import _ckernel
except ImportError:
    _ckernel = None

P = 1_000_003


def _points(rng, count):
    # the kernel never checks membership, so any pairs with y != 0 will do
    a = rng.randrange(P)
    out = []
    for _ in range(count):
        x, y = rng.randrange(P), rng.randrange(1, P)
        out.append((x, y))
    return a, out


def _add_loop(kernel, a, pts):
    def run():
        x, y = pts[0]
        for x2, y2 in pts[1:]:
            _, x, y = kernel.ec_add(x, y, x2, y2, a, P)
    return run


def _det_loop(kernel, mats):
    def run():
        for m in mats:
            kernel.det_mod(m, P)
    return run


def _minors_loop(kernel, mats):
    def run():
        for m in mats:
            kernel.minors_mod(m[:-1], P)
    return run


def _end_to_end(pure: bool, trials: int) -> float:
    env = dict(os.environ)
    if pure:
        env["ECSUM_PURE_PYTHON"] = "1"
    else:
        env.pop("ECSUM_PURE_PYTHON", None)
    code = (
        "import time;from ecsum.suites import PointSource, run_sum3;"
        "from ecsum.fields import FieldDescriptor as F;"
        "t=time.perf_counter();"
        f"assert run_sum3(PointSource(F.prime({P})), {trials}, 0).ok;"
        "print(time.perf_counter()-t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--trials", type=int, default=1000, help="sum3 trials end to end")
    args = parser.parse_args()
    if _ckernel is None:
        sys.exit("compiled kernel not built; run `pip install -e . --no-build-isolation`")

    rng = random.Random(0)
    a, pts = _points(rng, 20_000)
    mats = {n: [[[rng.randrange(P) for _ in range(n)] for _ in range(n)] for _ in range(500)]
            for n in (4, 9)}

    cases = [("ec_add x20000", lambda k: _add_loop(k, a, pts))]
    for n, ms in mats.items():
        cases.append((f"det_mod {n}x{n} x500", lambda k, ms=ms: _det_loop(k, ms)))
        cases.append((f"minors_mod {n - 1}x{n} x500", lambda k, ms=ms: _minors_loop(k, ms)))

    print(f"{'kernel':<24}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for label, make in cases:
        py = min(timeit.repeat(make(_pykernel), number=1, repeat=args.repeat)) * 1000
        cy = min(timeit.repeat(make(_ckernel), number=1, repeat=args.repeat)) * 1000
        print(f"{label:<24}{py:>12.2f}{cy:>12.2f}{py / cy:>9.1f}x")

    py = _end_to_end(True, args.trials)
    cy = _end_to_end(False, args.trials)
    print(f"{f'sum3 suite x{args.trials}':<24}{py * 1000:>12.0f}{cy * 1000:>12.0f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
