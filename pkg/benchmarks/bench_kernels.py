"""Time the vectorised special-function kernels with and without numba.

The JIT switch is read at import, so each path runs in its own interpreter:

    python3 benchmarks/bench_kernels.py            # both paths, side by side
    python3 benchmarks/bench_kernels.py --worker   # current BIORTHO_JIT only
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def _kernels():
    from biortho import specfun

    xa = np.linspace(-30.0, 30.0, 20000)
    xu = np.linspace(1e-3, 40.0, 4000)
    xg = np.linspace(0.0, 60.0, 20000)
    return {
        "airy_vec (20k pts)": lambda: specfun.airy_vec(xa),
        "tricomi_vec a=0.4 c=0.8 (4k pts)": lambda: specfun.tricomi_vec(0.4, 0.8, xu),
        "kummer_scaled_vec (20k pts)": lambda: specfun.kummer_scaled_vec(0.7, 1.9, xg),
        "gammainc_vec upper a=2.5 (20k pts)": lambda: specfun.gammainc_vec(2.5, xg, True),
        "omega_scaled_vec nu=0.5 (20k pts)": lambda: specfun.omega_scaled_vec(0.5, xg, 0.0),
    }


def _time(fn, repeat):
    t0 = time.perf_counter()
    fn()  # warm-up, includes compilation on the JIT path
    first = time.perf_counter() - t0
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return first, best


def worker(repeat):
    from biortho import _jit

    out = {"jit": _jit.USE_JIT, "timings": {}}
    for name, fn in _kernels().items():
        out["timings"][name] = _time(fn, repeat)
    print(json.dumps(out))


def run_path(flag, repeat):
    env = dict(os.environ, BIORTHO_JIT=flag)
    res = subprocess.run([sys.executable, __file__, "--worker", "--repeat", str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--worker", action="store_true")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if args.worker:
        worker(args.repeat)
        return 0
    py = run_path("0", args.repeat)
    jt = run_path("1", args.repeat)
    if not jt["jit"]:
        print("numba unavailable: both runs used the numpy path")
    print(f"{'kernel':40s} {'numpy [ms]':>12s} {'numba [ms]':>12s} {'first call':>12s} {'speedup':>9s}")
    for name in py["timings"]:
        p = py["timings"][name][1] * 1e3
        first, best = jt["timings"][name]
        j = best * 1e3
        print(f"{name:40s} {p:12.2f} {j:12.2f} {first * 1e3:12.1f} {p / j:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
