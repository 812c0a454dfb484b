"""Compare the compiled and pure-Python convolution kernels.

    python benchmarks/bench_kernels.py [--orders 16 32 48] [--repeat 5]

Part one times ``convolve2d`` on the integer rows of F(t, x) (large
numerators, object path) and of (1+t)^-3 (small numerators, machine-word
path).  Part two times ``changhee verify all`` end to end with each
backend in a fresh interpreter.
"""

import argparse
import importlib
import os
import subprocess
import sys
import time
import timeit

from changhee import _pykernels
from changhee.series import _integer_rows, ts_F, ts_shifted_pow


def _best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def kernel_table(orders, repeat):
    try:
        ck = importlib.import_module("changhee._ckernels")
    except ImportError:
        print("compiled kernels not built; only the pure-Python backend is available")
        return
    print(f"{'workload':<22}{'order':>6}{'python [ms]':>14}{'cython [ms]':>14}{'speedup':>10}")
    for label, make in (("F(t,x) rows", ts_F), ("(1+t)^-3 rows", lambda T: ts_shifted_pow(1, -3, T))):
        for T in orders:
            rows, _ = _integer_rows(make(T), T)
            assert ck.convolve2d(rows, rows, T) == _pykernels.convolve2d(rows, rows, T)
            tp = _best(lambda: _pykernels.convolve2d(rows, rows, T), repeat)
            tc = _best(lambda: ck.convolve2d(rows, rows, T), repeat)
            print(f"{label:<22}{T:>6}{tp * 1e3:>14.3f}{tc * 1e3:>14.3f}{tp / tc:>10.2f}")


def end_to_end(args):
    cmd = [sys.executable, "-m", "changhee", "verify", "all", *args]
    print(f"\nend to end: {' '.join(cmd[1:])}")
    for backend, env_value in (("python", "1"), ("cython", "")):
        env = dict(os.environ, CHANGHEE_PURE_PYTHON=env_value)
        start = time.perf_counter()
        proc = subprocess.run(cmd, env=env, capture_output=True)
        elapsed = time.perf_counter() - start
        print(f"  {backend:<8}{elapsed:8.3f} s  exit {proc.returncode}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--orders", type=int, nargs="+", default=[16, 32, 48])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--skip-end-to-end", action="store_true")
    args = parser.parse_args()
    kernel_table(args.orders, args.repeat)
    if not args.skip_end_to_end:
        end_to_end([])
        end_to_end(["--n-max", "14", "--k-max", "14", "--order", "32"])


if __name__ == "__main__":
    main()
