"""Volume of P_n: exact recurrence, EGF check, and an Ehrhart oracle."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ContractError, ResourceBoundError
from .numerics import DEFAULT_ORDER, RationalSeries, binomial, factorial
from .scan import sharded_count

VOLUME_ORACLE_MAX_N = 5


@lru_cache(maxsize=None)
def volume(n: int) -> Fraction:
    """The n-dimensional volume V_n of P_n, exactly.

    V_0 = 1, V_1 = 0 (a point has no length), and for n >= 2

        V_n = (1/n) sum_{k=0}^{n-1} C(n,k) (n-k)^(n-k-1) (n+k-1)/2 V_k.
    """
    if n < 0:
        raise ContractError(f"n must be >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(0)
    acc = Fraction(0)
    for k in range(n):
        acc += (binomial(n, k) * (n - k) ** (n - k - 1) * (n + k - 1)
                * volume(k)) / 2
    return acc / n


def volume_table(up_to: int) -> dict[int, Fraction]:
    return {n: volume(n) for n in range(up_to + 1)}


def egf_identity_check(order: int = DEFAULT_ORDER
                       ) -> tuple[bool, RationalSeries]:
    """Compare sum V_n x^n/n! with exp(integral of x g'(x)^2 / 2).

    Here g = sum_{n>=1} n^(n-1) x^n / n! (the tree function).  Returns
    whether both sides agree through ``x**order`` and their difference.
    """
    if order < 1:
        raise ContractError("order must be >= 1")
    g = RationalSeries.from_function(
        lambda i: Fraction(i ** (i - 1), factorial(i)) if i else 0, order
    )
    dg = g.derivative()
    rhs = (dg * dg).shift(1).scale(Fraction(1, 2)).integral().exp()
    lhs = RationalSeries.egf([volume(i) for i in range(order + 1)], order)
    residual = lhs - rhs
    return all(c == 0 for c in residual.coeffs), residual


def ehrhart_count(n: int, m: int, shards: int = 1,
                  budget: int | None = None) -> int:
    """|m P_n ∩ Z^n| by scanning the box [m, mn]^n."""
    if n < 1 or m < 0:
        raise ContractError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    if m == 0:
        return 1
    return sharded_count(n, m, shards=shards, budget=budget,
                         method="ehrhart")


def interpolate_leading(values: list[int]) -> Fraction:
    """Leading coefficient of the degree-d polynomial through (i, values[i]).

    With d + 1 equally spaced samples this is the d-th forward difference
    divided by d!.
    """
    diffs = [Fraction(v) for v in values]
    d = len(values) - 1
    for _ in range(d):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    return diffs[0] / factorial(d)


def volume_oracle(n: int, shards: int = 1,
                  budget: int | None = None) -> Fraction:
    """Volume from Ehrhart counts at m = 0..n, independent of the recurrence."""
    if not 1 <= n <= VOLUME_ORACLE_MAX_N:
        raise ResourceBoundError("volume_oracle", n, VOLUME_ORACLE_MAX_N, "n")
    counts = [ehrhart_count(n, m, shards=shards, budget=budget)
              for m in range(n + 1)]
    return interpolate_leading(counts)
