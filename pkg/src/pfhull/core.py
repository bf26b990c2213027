"""The polytope P_n: facets, membership, vertices, layers and the edge graph.

P_n is the convex hull in R^n of all parking functions of length n.  Its
vertices are the distinct permutations of ``(1, ..., 1, k+1, ..., n)`` with k
ones (1 <= k <= n); such a vertex sits on layer ``n - k``.  Its facets are
``x_i >= 1`` together with, for every subset I with ``|I| = k`` in
``{1, ..., n-2} ∪ {n}``, ``sum_{i in I} x_i <= kn - k(k-1)/2``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import ContractError, DegenerateDimensionError
from .numerics import factorial

Point = tuple[int, ...]


def is_parking_function(a: Sequence[int]) -> bool:
    n = len(a)
    if any(not (1 <= x <= n) for x in a):
        return False
    return all(b <= i for i, b in enumerate(sorted(a), start=1))


def enumerate_parking_functions(n: int) -> Iterator[Point]:
    """Yield every parking function of length n in lexicographic order."""
    if n < 1:
        raise ContractError(f"parking functions need n >= 1, got {n}")
    for a in itertools.product(range(1, n + 1), repeat=n):
        if is_parking_function(a):
            yield a


def upper_bound(n: int, k: int) -> int:
    """(n-k+1) + ... + n, the cap on any k coordinates."""
    return k * n - k * (k - 1) // 2


def bounded_sizes(n: int) -> list[int]:
    """Subset sizes that carry an upper-bound facet: 1..n-2 and n."""
    return [k for k in range(1, n + 1) if k <= n - 2 or k == n]


@dataclass(frozen=True)
class Inequality:
    """``sense * sum_{i in support} x_i <= rhs`` (sense -1 encodes x_i >= 1)."""

    support: tuple[int, ...]
    sense: int
    rhs: int

    def slack(self, x: Sequence) -> Fraction | int:
        s = sum(x[i] for i in self.support)
        return self.rhs - self.sense * s

    def __str__(self) -> str:
        lhs = " + ".join(f"x{i + 1}" for i in self.support)
        if self.sense < 0:
            return f"{lhs} >= {-self.rhs}"
        return f"{lhs} <= {self.rhs}"


@dataclass(frozen=True)
class FacetSystem:
    n: int
    inequalities: tuple[Inequality, ...]

    def __len__(self) -> int:
        return len(self.inequalities)

    def __iter__(self):
        return iter(self.inequalities)

    def contains(self, x: Sequence) -> bool:
        return all(ineq.slack(x) >= 0 for ineq in self.inequalities)

    def tight(self, x: Sequence) -> list[int]:
        """Indices of the inequalities met with equality at ``x``."""
        return [i for i, ineq in enumerate(self.inequalities)
                if ineq.slack(x) == 0]


def facet_system(n: int) -> FacetSystem:
    """Lower bounds first (x_1..x_n), then upper bounds by subset size."""
    if n < 2:
        raise DegenerateDimensionError("P_1 is a point; no facet system")
    ineqs = [Inequality((i,), -1, -1) for i in range(n)]
    for k in bounded_sizes(n):
        rhs = upper_bound(n, k)
        for subset in itertools.combinations(range(n), k):
            ineqs.append(Inequality(subset, 1, rhs))
    return FacetSystem(n, tuple(ineqs))


def membership(x: Sequence, n: int | None = None, m: int = 1) -> bool:
    """Is ``x`` in the dilation m * P_n?

    Sorting once and checking prefix sums of the k largest coordinates is
    equivalent to checking every k-subset bound.
    """
    if n is None:
        n = len(x)
    if len(x) != n:
        raise ContractError(f"point has {len(x)} coordinates, expected {n}")
    if m < 0:
        raise ContractError("dilation must be non-negative")
    if any(xi < m for xi in x):
        return False
    desc = sorted(x, reverse=True)
    s = 0
    for k, v in enumerate(desc, start=1):
        s += v
        if (k <= n - 2 or k == n) and s > m * upper_bound(n, k):
            return False
    return True


@dataclass(frozen=True, order=True)
class Vertex:
    layer: int
    entries: Point

    @classmethod
    def of(cls, entries: Sequence[int]) -> Vertex:
        entries = tuple(entries)
        return cls(layer_of(entries), entries)

    def to_json(self) -> str:
        return json.dumps({"v": list(self.entries), "layer": self.layer},
                          separators=(",", ":"))


def layer_pattern(n: int, k: int) -> Point:
    """(1, ..., 1, k+1, ..., n) with k ones."""
    return (1,) * k + tuple(range(k + 1, n + 1))


def layer_of(v: Sequence[int]) -> int:
    """Layer ``n - k`` of a vertex; raises if ``v`` is not a vertex."""
    n = len(v)
    k = sum(1 for x in v if x == 1)
    if k == 0 or tuple(sorted(v)) != layer_pattern(n, k):
        raise ContractError(f"{tuple(v)} is not a vertex of P_{n}")
    return n - k


def distinct_permutations(values: Sequence[int]) -> Iterator[Point]:
    """Distinct permutations of a multiset, in lexicographic order."""
    a = sorted(values)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def vertices(n: int) -> Iterator[Vertex]:
    """All vertices, by layer and then lexicographically."""
    if n < 1:
        raise ContractError(f"n must be >= 1, got {n}")
    for layer in range(n):
        k = n - layer
        for p in distinct_permutations(layer_pattern(n, k)):
            yield Vertex(layer, p)


def vertex_count(n: int) -> int:
    """n! (1/1! + ... + 1/n!) = sum_{k=1..n} n!/k!."""
    if n < 1:
        raise ContractError(f"n must be >= 1, got {n}")
    return sum(factorial(n) // factorial(k) for k in range(1, n + 1))


@dataclass
class EdgeGraph:
    n: int
    vertices: list[Vertex]
    adjacency: dict[Point, list[Point]] = field(repr=False)

    @property
    def edges(self) -> list[tuple[Point, Point]]:
        out = []
        for v in self.vertices:
            for u in self.adjacency[v.entries]:
                if v.entries < u:
                    out.append((v.entries, u))
        return sorted(out)

    def degree(self, v: Sequence[int]) -> int:
        return len(self.adjacency[tuple(v)])

    def to_json_lines(self) -> Iterator[str]:
        for a, b in self.edges:
            yield json.dumps({"e": [list(a), list(b)]}, separators=(",", ":"))


def vertex_neighbors(v: Sequence[int]) -> list[Point]:
    """Neighbors of a vertex in the graph of P_n.

    Conjugates the neighbor rules for the sorted vertex
    ``(1, ..., 1, k+1, ..., n)`` by the coordinate permutation taking it to
    ``v``:

    * same layer: swap the positions holding j and j+1, for k+1 <= j <= n-1
      (1 <= j <= n-1 when k = 1);
    * one layer up (k >= 2): put the value k on one of the k positions
      holding 1;
    * one layer down (k <= n-1): set the position holding k+1 to 1.
    """
    v = tuple(v)
    n = len(v)
    k = n - layer_of(v)
    where = {x: i for i, x in enumerate(v) if x != 1}
    out: list[Point] = []
    if k == 1:
        where[1] = v.index(1)
    for j in range(k + 1 if k >= 2 else 1, n):
        a, b = where[j], where[j + 1]
        u = list(v)
        u[a], u[b] = u[b], u[a]
        out.append(tuple(u))
    if k >= 2:
        for i, x in enumerate(v):
            if x == 1:
                out.append(v[:i] + (k,) + v[i + 1:])
    if k <= n - 1:
        i = where[k + 1]
        out.append(v[:i] + (1,) + v[i + 1:])
    return out


def edge_graph(n: int) -> EdgeGraph:
    if n < 2:
        raise DegenerateDimensionError("P_1 is a point; it has no edges")
    verts = list(vertices(n))
    adjacency: dict[Point, set[Point]] = {v.entries: set() for v in verts}
    for v in verts:
        for u in vertex_neighbors(v.entries):
            adjacency[v.entries].add(u)
            adjacency[u].add(v.entries)
    return EdgeGraph(
        n, verts, {p: sorted(nb) for p, nb in adjacency.items()}
    )
