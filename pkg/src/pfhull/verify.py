"""Cross-checks between closed formulas and independent oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .core import edge_graph, vertex_count
from .errors import ResourceBoundError
from .faces import (
    ORACLE_MAX_N,
    edge_count,
    enumerate_faces,
    f_vector,
    face_lattice_oracle,
    face_vertices,
)
from .lattice import (
    ORDERED_MAX_N,
    lattice_count,
    postnikov_slice_count,
    slice_count_bruteforce,
    slice_range,
)
from .numerics import binomial, factorial, stirling2
from .volume import VOLUME_ORACLE_MAX_N, egf_identity_check, volume, volume_oracle

EULER_MAX_N = 12
GRAPH_MAX_N = 7
EGF_ORDER = 10

PASS = "pass"
FAIL = "fail"
SKIP_BOUND = "skipped: resource bound"
SKIP_LEVEL = "skipped: level fast"


@dataclass
class CheckResult:
    name: str
    status: str
    counterexample: dict[str, Any] | None = field(default=None)

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"check": self.name, "status": self.status}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


def f_vector_reversed(n: int) -> list[int]:
    """The f-vector formula summed in the opposite order over m."""
    f = [0] * n
    for s in range(n, 0, -1):
        acc = 0
        for m in range(s, -1, -1):
            if m != 1:
                acc += (stirling2(n - m + 1, s - m + 1) * factorial(s - m)
                        * binomial(n, m))
        f[n - s] = acc
    return f


def _check_fvector_identities(n, **_):
    f = f_vector(n)
    v = vertex_count(n)
    if f[0] != v:
        return {"f0": f[0], "vertex_count": v}
    if 2 * f[1] != n * f[0] or f[1] != edge_count(n):
        return {"f1": f[1], "n*f0/2": n * f[0] // 2}
    if f[n - 1] != 2 ** n - 1:
        return {"f_last": f[n - 1], "expected": 2 ** n - 1}
    return None


def _check_euler(n, **_):
    f = f_vector(n)
    lhs = sum((-1) ** i * x for i, x in enumerate(f))
    rhs = 1 - (-1) ** n
    return None if lhs == rhs else {"alternating_sum": lhs, "expected": rhs}


def _check_fvector_order(n, **_):
    a, b = f_vector(n), f_vector_reversed(n)
    return None if a == b else {"forward": a, "reversed": b}


def _check_egf(n, **_):
    ok, residual = egf_identity_check(EGF_ORDER)
    if ok:
        return None
    return {"residual": [str(c) for c in residual.coeffs]}


def _check_graph(n, **_):
    g = edge_graph(n)
    for v in g.vertices:
        nb = g.adjacency[v.entries]
        if len(nb) != n:
            return {"vertex": list(v.entries), "degree": len(nb)}
    expected = n * vertex_count(n) // 2
    if len(g.edges) != expected:
        return {"edges": len(g.edges), "expected": expected}
    layer = {v.entries: v.layer for v in g.vertices}
    for a, b in g.edges:
        if abs(layer[a] - layer[b]) > 1:
            return {"edge": [list(a), list(b)], "layers": [layer[a], layer[b]]}
    return None


def _check_face_oracle(n, shards=1, **_):
    oracle = face_lattice_oracle(n, shards=shards)
    f = f_vector(n)
    got = [len(oracle[d]) for d in range(n)]
    if got != f:
        return {"oracle": got, "formula": f}
    for d in range(n + 1):
        sets = [face_vertices(fd, n) for fd in enumerate_faces(n, d)]
        if len(set(sets)) != len(sets) or set(sets) != oracle[d]:
            return {"dimension": d, "partition_faces": len(sets),
                    "distinct": len(set(sets)), "oracle_faces": len(oracle[d])}
    if n <= 4:
        oracle_edges = {tuple(sorted(s)) for s in oracle[1]}
        graph_edges = set(edge_graph(n).edges)
        if oracle_edges != graph_edges:
            diff = sorted(oracle_edges ^ graph_edges)[0]
            return {"edge_mismatch": [list(p) for p in diff]}
    return None


def _check_volume_oracle(n, shards=1, budget=None):
    a, b = volume(n), volume_oracle(n, shards=shards, budget=budget)
    return None if a == b else {"recurrence": str(a), "ehrhart": str(b)}


def _check_lattice(n, shards=1, budget=None):
    for S in slice_range(n):
        a = postnikov_slice_count(n, S, budget)
        b = slice_count_bruteforce(n, S, shards=shards, budget=budget)
        if a != b:
            return {"S": S, "closed": a, "bruteforce": b}
    a = lattice_count(n, "closed", budget=budget)
    b = lattice_count(n, "bruteforce", shards=shards, budget=budget)
    return None if a == b else {"closed": a, "bruteforce": b}


# name, applicable-n predicate, is_oracle, check
CHECKS: list[tuple[str, Callable[[int], bool], bool, Callable]] = [
    ("fvector_identities", lambda n: True, False, _check_fvector_identities),
    ("euler_relation", lambda n: n <= EULER_MAX_N, False, _check_euler),
    ("fvector_summation_order", lambda n: True, False, _check_fvector_order),
    ("egf_identity", lambda n: True, False, _check_egf),
    ("edge_graph_regularity", lambda n: n <= GRAPH_MAX_N, True, _check_graph),
    ("face_lattice_oracle", lambda n: n <= ORACLE_MAX_N, True,
     _check_face_oracle),
    ("volume_oracle", lambda n: n <= VOLUME_ORACLE_MAX_N, True,
     _check_volume_oracle),
    ("lattice_equivalence", lambda n: n <= ORDERED_MAX_N, True,
     _check_lattice),
]


def run_checks(n: int, level: str = "full", shards: int = 1,
               budget: int | None = None) -> list[CheckResult]:
    """Run every check that applies at n; stop at the first failure."""
    if level not in ("fast", "full"):
        raise ValueError(f"level must be fast or full, got {level!r}")
    results = []
    for name, applies, is_oracle, fn in CHECKS:
        if not applies(n):
            results.append(CheckResult(name, SKIP_BOUND))
            continue
        if is_oracle and level == "fast":
            results.append(CheckResult(name, SKIP_LEVEL))
            continue
        try:
            bad = fn(n, shards=shards, budget=budget)
        except ResourceBoundError:
            results.append(CheckResult(name, SKIP_BOUND))
            continue
        if bad is None:
            results.append(CheckResult(name, PASS))
        else:
            results.append(CheckResult(name, FAIL, bad))
            break
    return results
