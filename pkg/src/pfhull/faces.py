"""Faces of P_n.

A face is the set of maximizers of some linear functional c.  It depends
only on the ordered partition ``(B_-1, B_0, B_1, ..., B_k)`` of the
coordinate indices, where B_-1 holds the negative entries of c, B_0 the
zero entries, and B_j the indices carrying the j-th smallest positive
value.  Its dimension is ``n - k - |B_-1|``.  Two degenerate patterns
(``|B_-1| = 0, |B_0| = 1`` and ``|B_-1| = 0, |B_0| = 0, |B_1| = 1``) repeat a
face given by another partition and are skipped.

Coordinate indices are 0-based throughout this module.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .core import Point, distinct_permutations, facet_system, vertices
from .errors import ContractError, ResourceBoundError
from .numerics import binomial, factorial, stirling2

ORACLE_MAX_N = 5


@dataclass(frozen=True)
class OrderedPartition:
    minus: tuple[int, ...]
    zero: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.minus) + len(self.zero) + sum(map(len, self.blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def sizes(self) -> tuple[int, ...]:
        """(l_-1, l_0, l_1, ..., l_k)."""
        return (len(self.minus), len(self.zero)) + tuple(map(len, self.blocks))

    def is_valid(self) -> bool:
        idx = list(self.minus) + list(self.zero)
        for b in self.blocks:
            if not b:
                return False
            idx.extend(b)
        if sorted(idx) != list(range(len(idx))):
            return False
        return not _is_degenerate(len(self.minus), len(self.zero),
                                  len(self.blocks[0]) if self.blocks else 0)

    def functional(self) -> tuple[int, ...]:
        """A representative c: -1 on B_-1, 0 on B_0, j on B_j."""
        c = [0] * self.n
        for i in self.minus:
            c[i] = -1
        for j, b in enumerate(self.blocks, start=1):
            for i in b:
                c[i] = j
        return tuple(c)


def _is_degenerate(l_minus: int, l_zero: int, l_one: int) -> bool:
    return l_minus == 0 and (l_zero == 1 or (l_zero == 0 and l_one == 1))


@dataclass(frozen=True)
class FaceDescriptor:
    partition: OrderedPartition
    dimension: int

    @classmethod
    def of(cls, partition: OrderedPartition) -> FaceDescriptor:
        p = partition
        return cls(p, p.n - p.k - len(p.minus))

    def to_json(self, verts: Iterable[Point] | None = None) -> str:
        p = self.partition
        rec = {
            "dim": self.dimension,
            "minus": list(p.minus),
            "zero": list(p.zero),
            "blocks": [list(b) for b in p.blocks],
        }
        if verts is not None:
            rec["vertices"] = [list(v) for v in sorted(verts)]
        return json.dumps(rec, separators=(",", ":"))


def f_vector(n: int) -> list[int]:
    """(f_0, ..., f_{n-1}) from the closed formula

        f_{n-s} = sum_{m=0, m != 1}^{s} C(n, m) (s-m)! S(n-m+1, s-m+1)

    for s = 1..n.  The s = 0 term (the polytope itself) is left out.
    """
    if n < 1:
        raise ContractError(f"n must be >= 1, got {n}")
    f = [0] * n
    for s in range(1, n + 1):
        f[n - s] = sum(
            binomial(n, m) * factorial(s - m) * stirling2(n - m + 1, s - m + 1)
            for m in range(0, s + 1) if m != 1
        )
    return f


def edge_count(n: int) -> int:
    """(n n! / 2)(1/1! + ... + 1/n!)."""
    if n < 2:
        raise ContractError(f"edge_count needs n >= 2, got {n}")
    total = sum(n * factorial(n) // factorial(k) for k in range(1, n + 1))
    return total // 2


def ordered_set_partitions(elems: Sequence[int], k: int
                           ) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All ways to split ``elems`` into k nonempty, ordered blocks."""
    elems = tuple(elems)
    if k == 0:
        if not elems:
            yield ()
        return
    if len(elems) < k:
        return
    # the first block is any nonempty subset leaving enough for the rest
    for size in range(1, len(elems) - k + 2):
        for first in itertools.combinations(elems, size):
            rest = tuple(e for e in elems if e not in first)
            for tail in ordered_set_partitions(rest, k - 1):
                yield (first,) + tail


def enumerate_faces(n: int, d: int) -> Iterator[FaceDescriptor]:
    """Every ordered partition describing a d-dimensional face, once each.

    Chooses B_-1 (size m) first, then B_0 among the rest, then an ordered
    split of what remains into ``k = n - d - m`` nonempty blocks.
    """
    if not 0 <= d <= n:
        raise ContractError(f"need 0 <= d <= n, got d={d}, n={n}")
    idx = range(n)
    for m in range(0, n - d + 1):
        k = n - d - m
        for minus in itertools.combinations(idx, m):
            rest = [i for i in idx if i not in minus]
            for l0 in range(0, len(rest) - k + 1):
                for zero in itertools.combinations(rest, l0):
                    remaining = [i for i in rest if i not in zero]
                    for blocks in ordered_set_partitions(remaining, k):
                        l1 = len(blocks[0]) if blocks else 0
                        if _is_degenerate(m, l0, l1):
                            continue
                        yield FaceDescriptor(
                            OrderedPartition(minus, zero, blocks), d
                        )


def face_vertices(fd: FaceDescriptor | OrderedPartition, n: int | None = None
                  ) -> frozenset[Point]:
    """Vertices of the face described by an ordered partition.

    On B_-1 every vertex is 1; on B_0 it is a permutation of
    ``(1, ..., 1, j+1, ..., l_-1 + l_0)`` for some ``l_-1 <= j <= l_-1 + l_0``;
    on B_i it is a permutation of the next consecutive run of values.
    """
    p = fd.partition if isinstance(fd, FaceDescriptor) else fd
    if n is None:
        n = p.n
    if p.n != n:
        raise ContractError("partition does not cover 1..n")
    lm, l0 = len(p.minus), len(p.zero)
    top = lm + l0
    zero_choices: set[Point] = set()
    for j in range(lm, top + 1):
        pattern = [1] * (j - lm) + list(range(j + 1, top + 1))
        zero_choices.update(distinct_permutations(pattern))
    block_choices = []
    start = top
    for b in p.blocks:
        run = range(start + 1, start + len(b) + 1)
        block_choices.append(list(itertools.permutations(run)))
        start += len(b)
    out = set()
    for z in zero_choices:
        for parts in itertools.product(*block_choices):
            v = [1] * n
            for i, x in zip(p.zero, z):
                v[i] = x
            for b, vals in zip(p.blocks, parts):
                for i, x in zip(b, vals):
                    v[i] = x
            out.add(tuple(v))
    return frozenset(out)


def affine_dimension(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull, by exact elimination over Q."""
    points = [tuple(Fraction(x) for x in p) for p in points]
    if not points:
        return -1
    base = points[0]
    basis: list[tuple[int, list[Fraction]]] = []  # (pivot column, row)
    for p in points[1:]:
        row = [a - b for a, b in zip(p, base)]
        for piv, r in basis:
            if row[piv]:
                f = row[piv] / r[piv]
                row = [a - f * b for a, b in zip(row, r)]
        for c, a in enumerate(row):
            if a:
                basis.append((c, row))
                break
    return len(basis)


class IncidenceMatrix:
    """Facet-by-vertex tightness, rows stored as integer bitmasks.

    Bit j of ``rows[i]`` is set when vertex j meets facet i with equality.
    """

    def __init__(self, n: int):
        self.n = n
        self.facets = facet_system(n)
        self.vertices: list[Point] = [v.entries for v in vertices(n)]
        self.rows: list[int] = []
        for ineq in self.facets:
            mask = 0
            for j, v in enumerate(self.vertices):
                if ineq.slack(v) == 0:
                    mask |= 1 << j
            self.rows.append(mask)

    def column(self, j: int) -> list[int]:
        """Facet indices tight at vertex j."""
        return [i for i, r in enumerate(self.rows) if r >> j & 1]

    def vertex_set(self, mask: int) -> frozenset[Point]:
        return frozenset(v for j, v in enumerate(self.vertices) if mask >> j & 1)


def _closure(seeds: Sequence[int], rows: Sequence[int]) -> set[int]:
    found = set(s for s in seeds if s)
    frontier = list(found)
    while frontier:
        nxt = []
        for f in frontier:
            for r in rows:
                g = f & r
                if g and g not in found:
                    found.add(g)
                    nxt.append(g)
        frontier = nxt
    return found


def face_lattice_oracle(n: int, shards: int = 1
                        ) -> dict[int, set[frozenset[Point]]]:
    """Faces of P_n found without the ordered-partition theory.

    Every nonempty proper face is an intersection of facets, so closing the
    facets' vertex sets under intersection finds them all; the dimension of
    each is measured directly.  Dimension n maps to the full vertex set.
    With ``shards > 1`` the seed facets are split across threads and the
    results merged; the output does not depend on ``shards``.
    """
    if not 2 <= n <= ORACLE_MAX_N:
        raise ResourceBoundError("face_lattice_oracle", n, ORACLE_MAX_N, "n")
    inc = IncidenceMatrix(n)
    rows = inc.rows
    if shards <= 1:
        masks = _closure(rows, rows)
    else:
        chunks = [rows[i::shards] for i in range(shards)]
        with ThreadPoolExecutor(max_workers=shards) as pool:
            parts = list(pool.map(lambda c: _closure(c, rows), chunks))
        masks = set().union(*parts)
    out: dict[int, set[frozenset[Point]]] = {d: set() for d in range(n + 1)}
    for mask in masks:
        vs = inc.vertex_set(mask)
        out[affine_dimension(sorted(vs))].add(vs)
    out[n].add(frozenset(inc.vertices))
    return out
