"""Lattice points of P_n, slice by slice.

Cutting P_n at coordinate sum S gives P_{n,S}, the convex hull of all
permutations of one sorted vector: ``(1, ..., 1)`` when S = n, otherwise
``(1, ..., 1, r, k+2, ..., n)`` with k ones and a unique ``2 <= r <= k+1``.
Each slice is a generalized permutohedron whose lattice points are counted
by Postnikov's dragon-marriage formula; summing over S gives |P_n ∩ Z^n|.

Subsets of ``[n] = {1, ..., n}`` are handled as bitmasks (bit i-1 for i).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContractError, DomainError, IntegrityError, ResourceBoundError
from .numerics import binomial, factorial, raising_factorial
from .scan import default_budget, sharded_count

ORDERED_MAX_N = 5


@dataclass(frozen=True)
class SliceSpec:
    """Sum level S of P_n.  ``r is None`` marks the all-ones slice (S = n)."""

    n: int
    S: int
    k: int
    r: int | None

    @property
    def all_ones(self) -> bool:
        return self.r is None


def slice_range(n: int) -> range:
    """Sum levels with a nonempty slice: n .. n(n+1)/2."""
    return range(n, n * (n + 1) // 2 + 1)


def slice_spec(n: int, S: int) -> SliceSpec:
    """Locate (r, k) for sum level S.

    For S > n there is a unique k with L(k) < S <= L(k) + k, where
    ``L(k) = (k+1) + (k+2) + ... + n`` is the sum of k+1 ones and the run
    k+2..n; then r = 1 + S - L(k).
    """
    if n < 1:
        raise ContractError(f"n must be >= 1, got {n}")
    if S not in slice_range(n):
        raise DomainError(
            f"S={S} outside {n}..{n * (n + 1) // 2} for n={n}"
        )
    if S == n:
        return SliceSpec(n, S, n, None)
    for k in range(n - 1, 0, -1):
        low = (k + 1) + sum(range(k + 2, n + 1))
        if low < S <= low + k:
            return SliceSpec(n, S, k, 1 + S - low)
    raise IntegrityError(f"no (r, k) found for n={n}, S={S}")


def slice_vertex_type(spec: SliceSpec) -> tuple[int, ...]:
    if spec.all_ones:
        return (1,) * spec.n
    return (1,) * spec.k + (spec.r,) + tuple(range(spec.k + 2, spec.n + 1))


def y_coordinates(x: Sequence[int]) -> tuple[int, ...]:
    """y_j = sum_{i=0}^{j-1} (-1)^i C(j-1, i) x_{j-i}  (iterated differences)."""
    return tuple(
        sum((-1) ** i * binomial(j - 1, i) * x[j - 1 - i] for i in range(j))
        for j in range(1, len(x) + 1)
    )


def x_from_y(y: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`y_coordinates`: x_j = sum_i C(j-1, i-1) y_i."""
    return tuple(
        sum(binomial(j - 1, i - 1) * y[i - 1] for i in range(1, j + 1))
        for j in range(1, len(y) + 1)
    )


def _mask(subset) -> int:
    if isinstance(subset, int):
        return subset
    m = 0
    for i in subset:
        m |= 1 << (i - 1)
    return m


def dragon_condition(collection: Iterable) -> bool:
    """Every j of the subsets together cover at least j+1 elements.

    Checked directly over all nonempty index sets.
    """
    masks = [_mask(s) for s in collection]
    for size in range(1, len(masks) + 1):
        for idx in itertools.combinations(masks, size):
            u = 0
            for s in idx:
                u |= s
            if u.bit_count() < size + 1:
                return False
    return True


def _full_matching(masks: Sequence[int], allowed: int) -> bool:
    """Can every subset pick a distinct element from ``allowed``?"""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        m = masks[i] & allowed
        while m:
            low = m & -m
            m ^= low
            if low in seen:
                continue
            seen.add(low)
            if low not in owner or augment(owner[low], seen):
                owner[low] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(masks)))


def dragon_condition_matching(collection: Iterable, n: int) -> bool:
    """The same condition via Hall's theorem.

    Unions of j subsets have at least j+1 elements exactly when, for every
    element e of [n], the subsets have a system of distinct representatives
    avoiding e.
    """
    masks = [_mask(s) for s in collection]
    full = (1 << n) - 1
    if not masks:
        return True
    return all(_full_matching(masks, full & ~(1 << e)) for e in range(n))


def _bracket(masks: Sequence[int], base: dict[int, int]) -> int:
    """{prod Y_I}: raising factorials per distinct subset and multiplicity."""
    out = 1
    for mask, a in Counter(masks).items():
        out *= raising_factorial(base[mask], a)
        if not out:
            break
    return out


def subset_bases(n: int, y: Sequence[int]) -> dict[int, int]:
    """Y_I = y_|I| for each I ⊆ [n] of size >= 2; Y_[n] is shifted by 1."""
    full = (1 << n) - 1
    bases = {}
    for mask in range(1, full + 1):
        size = mask.bit_count()
        if size < 2:
            continue
        bases[mask] = y[size - 1] + (1 if mask == full else 0)
    return bases


def postnikov_bracket_sum(n: int, S: int, budget: int | None = None,
                          grouped: bool = False) -> int:
    """Sum of brackets over dragon collections (before dividing by (n-1)!).

    Enumerates ordered tuples depth-first.  The unions of every subset of
    the chosen prefix are kept so each new subset is checked against the
    condition incrementally.  Subsets of size < 2 can never qualify, and a
    subset whose base Y_I is 0 makes every bracket containing it vanish,
    so neither is tried.

    With ``grouped=True`` only non-decreasing tuples are visited and each
    is weighted by its number of distinct orderings; both the condition and
    the bracket ignore order, so the sum is the same.
    """
    if budget is None:
        budget = default_budget()
    spec = slice_spec(n, S)
    y = y_coordinates(slice_vertex_type(spec))
    bases = subset_bases(n, y)
    cands = [m for m in sorted(bases) if bases[m] != 0]
    slots = n - 1
    c = len(cands)
    if not slots:
        work = 1  # the empty collection
    elif grouped:
        work = binomial(c + slots - 1, slots)
    else:
        work = c ** slots
    if work > budget:
        raise ResourceBoundError("closed", work, budget, "collections")
    orderings = factorial(slots)
    chosen: list[int] = []
    total = 0

    def rec(unions: list[int], start: int) -> None:
        nonlocal total
        if len(chosen) == slots:
            w = _bracket(chosen, bases)
            if grouped and w:
                mult = orderings
                for a in Counter(chosen).values():
                    mult //= factorial(a)
                w *= mult
            total += w
            return
        for pos in range(start, c):
            s = cands[pos]
            # unions[U] covers index set U of the prefix (bit t = new slot)
            ext = []
            for u_idx, u in enumerate(unions):
                w = u | s
                if w.bit_count() < u_idx.bit_count() + 2:
                    break
                ext.append(w)
            else:
                chosen.append(s)
                rec(unions + ext, pos if grouped else 0)
                chosen.pop()

    rec([0], 0)
    return total


def postnikov_slice_count(n: int, S: int, budget: int | None = None,
                          grouped: bool | None = None) -> int:
    """|P_{n,S} ∩ Z^n| = bracket sum / (n-1)!, with exactness enforced.

    ``grouped=None`` enumerates ordered tuples up to n = 5 and switches to
    multiset enumeration from n = 6 on.
    """
    if grouped is None:
        grouped = n > ORDERED_MAX_N
    total = postnikov_bracket_sum(n, S, budget, grouped)
    q, rem = divmod(total, factorial(n - 1))
    if rem:
        raise IntegrityError(
            f"bracket sum {total} not divisible by {n - 1}! (n={n}, S={S})"
        )
    return q


def slice_count_bruteforce(n: int, S: int, shards: int = 1,
                           budget: int | None = None) -> int:
    slice_spec(n, S)  # domain check
    return sharded_count(n, 1, level=S, shards=shards, budget=budget,
                         method="bruteforce")


def lattice_count(n: int, method: str = "closed", shards: int = 1,
                  budget: int | None = None,
                  grouped: bool | None = None) -> int:
    """|P_n ∩ Z^n| by the slice formula ("closed") or a box scan."""
    if n < 1:
        raise ContractError(f"n must be >= 1, got {n}")
    if method == "closed":
        return sum(postnikov_slice_count(n, S, budget, grouped)
                   for S in slice_range(n))
    if method == "bruteforce":
        return sharded_count(n, 1, shards=shards, budget=budget,
                             method="bruteforce")
    raise ContractError(f"unknown method {method!r}")
