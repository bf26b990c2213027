"""Exact integers, rationals, combinatorial numbers and truncated power series.

Python's ``int`` is arbitrary precision and ``fractions.Fraction`` is always
kept in lowest terms with a positive denominator, so they serve directly as
the big-integer and big-rational types.  Nothing in here touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ContractError

BigInt = int
BigRational = Fraction

DEFAULT_ORDER = 10


@lru_cache(maxsize=None)
def _pascal_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _pascal_row(n - 1)
    return (1,) + tuple(prev[i] + prev[i + 1] for i in range(n - 1)) + (1,)


def binomial(n: int, k: int) -> int:
    """C(n, k) from Pascal rows; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ContractError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return _pascal_row(n)[k]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k).

    Uses S(n, k) = k S(n-1, k) + S(n-1, k-1) with S(0, 0) = 1.
    """
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    if n < 0:
        raise ContractError(f"factorial needs n >= 0, got {n}")
    return 1 if n == 0 else n * factorial(n - 1)


def raising_factorial(y: int, a: int) -> int:
    """y (y+1) ... (y+a-1); the empty product is 1."""
    if a < 0:
        raise ContractError(f"raising_factorial needs a >= 0, got {a}")
    out = 1
    for i in range(a):
        out *= y + i
    return out


class RationalSeries:
    """A power series over the rationals truncated after ``x**order``.

    Coefficients are stored as a tuple of length ``order + 1``; all operations
    return a new series of the same order and never look past it.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable = (), order: int = DEFAULT_ORDER):
        if order < 0:
            raise ContractError("truncation order must be non-negative")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.order = order

    @classmethod
    def from_function(cls, fn, order: int = DEFAULT_ORDER) -> RationalSeries:
        """Series whose n-th coefficient is ``fn(n)``."""
        return cls((fn(i) for i in range(order + 1)), order)

    @classmethod
    def egf(cls, seq: Sequence, order: int = DEFAULT_ORDER) -> RationalSeries:
        """Exponential generating function ``sum seq[n] x^n / n!``."""
        return cls.from_function(lambda i: Fraction(seq[i], factorial(i)), order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"RationalSeries([{terms}], order={self.order})"

    def _check(self, other: RationalSeries) -> None:
        if self.order != other.order:
            raise ContractError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: RationalSeries) -> RationalSeries:
        self._check(other)
        return RationalSeries(
            (a + b for a, b in zip(self.coeffs, other.coeffs)), self.order
        )

    def __neg__(self) -> RationalSeries:
        return RationalSeries((-a for a in self.coeffs), self.order)

    def __sub__(self, other: RationalSeries) -> RationalSeries:
        return self + (-other)

    def scale(self, c) -> RationalSeries:
        c = Fraction(c)
        return RationalSeries((c * a for a in self.coeffs), self.order)

    def __mul__(self, other):
        if not isinstance(other, RationalSeries):
            return self.scale(other)
        self._check(other)
        a, b, n = self.coeffs, other.coeffs, self.order
        out = [
            sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0))
            for k in range(n + 1)
        ]
        return RationalSeries(out, n)

    __rmul__ = __mul__

    def shift(self, by: int = 1) -> RationalSeries:
        """Multiply by ``x**by`` (dropping what falls off the end)."""
        return RationalSeries((Fraction(0),) * by + self.coeffs, self.order)

    def derivative(self) -> RationalSeries:
        # the top coefficient of the result is unknown after truncation; it
        # is set to zero, so callers wanting exactness at ``order`` must
        # carry one extra term
        cs = [i * self.coeffs[i] for i in range(1, self.order + 1)]
        return RationalSeries(cs, self.order)

    def integral(self) -> RationalSeries:
        """Antiderivative with zero constant term."""
        cs = [Fraction(0)] + [
            self.coeffs[i] / (i + 1) for i in range(self.order)
        ]
        return RationalSeries(cs, self.order)

    def exp(self) -> RationalSeries:
        """exp of a series with zero constant term.

        With h = exp(a): h' = a' h, so n h_n = sum_{k=1..n} k a_k h_{n-k}.
        """
        a = self.coeffs
        if a[0] != 0:
            raise ContractError("exp requires a zero constant term")
        h = [Fraction(1)]
        for n in range(1, self.order + 1):
            h.append(sum((k * a[k] * h[n - k] for k in range(1, n + 1)),
                         Fraction(0)) / n)
        return RationalSeries(h, self.order)

    def log(self) -> RationalSeries:
        """log of a series with constant term 1 (inverse of :meth:`exp`)."""
        h = self.coeffs
        if h[0] != 1:
            raise ContractError("log requires constant term 1")
        a = [Fraction(0)]
        for n in range(1, self.order + 1):
            s = n * h[n] - sum((k * a[k] * h[n - k] for k in range(1, n)),
                               Fraction(0))
            a.append(s / n)
        return RationalSeries(a, self.order)
