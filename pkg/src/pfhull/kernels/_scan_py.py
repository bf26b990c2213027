"""Pure-Python box scan (fallback for the compiled ``_scan`` kernel).

Both implementations must return identical counts; ``tests/test_kernels.py``
checks them against each other and against a naive membership scan.
"""

from __future__ import annotations

from bisect import insort


def count_points(n, lo, hi, bounds, checked, level=-1, first_lo=None,
                 first_hi=None):
    """Count integer points of ``[lo, hi]^n`` meeting top-k-sum bounds.

    ``bounds[k]`` caps the sum of the k largest coordinates whenever
    ``checked[k]`` is true (indices 1..n; the full-sum bound ``bounds[n]`` is
    always applied).  With ``level >= 0`` only points whose coordinates sum
    to ``level`` are counted.  ``first_lo``/``first_hi`` restrict the first
    coordinate, which is how callers shard the scan.
    """
    if n < 1 or lo > hi:
        return 0
    if first_lo is None:
        first_lo = lo
    if first_hi is None:
        first_hi = hi
    full = bounds[n]
    # prefix kept ascending as negated values => descending order of values
    neg: list[int] = []
    total = 0

    def rec(t, psum):
        nonlocal total
        rest = n - t - 1
        vmax = min(hi, full - psum - rest * lo)
        vmin = lo
        if level >= 0:
            vmax = min(vmax, level - psum - rest * lo)
            vmin = max(vmin, level - psum - rest * hi)
        if t == 0:
            vmin = max(vmin, first_lo)
            vmax = min(vmax, first_hi)
        top = 0
        for k in range(1, t + 1):
            if checked[k]:
                cap = bounds[k] - top
                if cap < vmax:
                    vmax = cap
            top -= neg[k - 1]
        if t + 1 < n and checked[t + 1]:
            cap = bounds[t + 1] - top
            if cap < vmax:
                vmax = cap
        if vmax < vmin:
            return
        if rest == 0:
            total += vmax - vmin + 1
            return
        for v in range(vmin, vmax + 1):
            insort(neg, -v)
            rec(t + 1, psum + v)
            neg.remove(-v)

    rec(0, 0)
    return total
