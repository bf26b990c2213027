"""Sharded brute-force lattice-point scans over the box [m, mn]^n."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from . import kernels
from .core import upper_bound
from .errors import ResourceBoundError

BUDGET_ENV = "PFHULL_BUDGET"
DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    """Max box points a brute-force scan may cover (env override)."""
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def scan_bounds(n: int, m: int) -> tuple[list[int], list[bool]]:
    """Top-k-sum caps of m * P_n, indexed by k = 1..n."""
    bounds = [0] * (n + 1)
    checked = [False] * (n + 1)
    for k in range(1, n + 1):
        if k <= n - 2 or k == n:
            checked[k] = True
            bounds[k] = m * upper_bound(n, k)
    return bounds, checked


def sharded_count(n: int, m: int, level: int = -1, shards: int = 1,
                  budget: int | None = None, method: str = "bruteforce",
                  count_points=None) -> int:
    """Count lattice points of m * P_n (optionally on a sum level).

    The box ``[m, mn]^n`` is split along the first coordinate into
    ``shards`` contiguous ranges counted in parallel and summed.
    """
    if budget is None:
        budget = default_budget()
    if count_points is None:
        count_points = kernels.count_points
    lo, hi = m, m * n
    box = (hi - lo + 1) ** n
    if box > budget:
        raise ResourceBoundError(method, box, budget)
    bounds, checked = scan_bounds(n, m)
    width = hi - lo + 1
    shards = max(1, min(shards, width))
    cuts = [lo + (width * i) // shards for i in range(shards + 1)]
    ranges = [(cuts[i], cuts[i + 1] - 1) for i in range(shards)]

    def run(r):
        return count_points(n, lo, hi, bounds, checked, level, r[0], r[1])

    if shards == 1:
        return run(ranges[0])
    with ThreadPoolExecutor(max_workers=shards) as pool:
        return sum(pool.map(run, ranges))
