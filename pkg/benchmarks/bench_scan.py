"""Compare the compiled and pure-Python box-scan kernels.

    python3 benchmarks/bench_scan.py [--max-n 8] [--repeat 3]

Prints one row per n: both counts (which must agree), the best wall time of
each backend, and the speedup.
"""

import argparse
import sys
import time

from pfhull import kernels
from pfhull.scan import scan_bounds


def best_time(fn, args, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--m", type=int, default=1, help="dilation factor")
    args = ap.parse_args(argv)

    if kernels.count_points_c is None:
        print("compiled kernel not built; only the Python backend is timed")
    print(f"{'n':>3} {'count':>10} {'python_s':>10} {'cython_s':>10} "
          f"{'speedup':>8}")
    for n in range(1, args.max_n + 1):
        bounds, checked = scan_bounds(n, args.m)
        call = (n, args.m, args.m * n, bounds, checked)
        tp, cp = best_time(kernels.count_points_py, call, args.repeat)
        if kernels.count_points_c is None:
            print(f"{n:>3} {cp:>10} {tp:>10.4f} {'-':>10} {'-':>8}")
            continue
        tc, cc = best_time(kernels.count_points_c, call, args.repeat)
        if cc != cp:
            print(f"mismatch at n={n}: python {cp}, cython {cc}",
                  file=sys.stderr)
            return 1
        speed = tp / tc if tc else float("inf")
        print(f"{n:>3} {cp:>10} {tp:>10.4f} {tc:>10.4f} {speed:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
