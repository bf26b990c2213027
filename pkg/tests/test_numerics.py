import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pfhull.errors import ContractError
from pfhull.numerics import (
    RationalSeries,
    binomial,
    factorial,
    raising_factorial,
    stirling2,
)


def set_partitions_count(n, k):
    """Count partitions of {0..n-1} into k blocks via restricted growth strings."""
    count = 0

    def rec(i, used):
        nonlocal count
        if i == n:
            count += used == k
            return
        for b in range(min(used + 1, k)):
            rec(i + 1, max(used, b + 1))

    rec(0, 0)
    return count


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (7, 0, 1), (8, 3, 56)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_factorial_ratio():
    for n in range(20):
        for k in range(-2, n + 3):
            want = math.comb(n, k) if 0 <= k <= n else 0
            assert binomial(n, k) == want


def test_binomial_rejects_negative_n():
    with pytest.raises(ContractError):
        binomial(-1, 0)


def test_stirling_examples():
    assert stirling2(4, 2) == 7
    assert stirling2(5, 4) == 10 == 5 * 4 // 2
    for n in range(11):
        assert stirling2(n, n) == 1
    assert stirling2(0, 0) == 1
    assert stirling2(3, 0) == 0
    assert stirling2(2, 5) == 0


def test_stirling_matches_brute_force():
    for n in range(1, 9):
        for k in range(0, n + 2):
            assert stirling2(n, k) == set_partitions_count(n, k)


def test_stirling_falling_factorial_identity():
    for n in range(9):
        for x in range(n + 1):
            lhs = sum(
                stirling2(n, k) * math.perm(x, k) for k in range(n + 1)
            )
            assert lhs == x ** n


def test_factorial():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(12) == math.prod(range(1, 13)) == 479001600


@pytest.mark.parametrize("y,a,expected", [(0, 2, 0), (1, 2, 2), (-2, 3, 0),
                                          (5, 0, 1), (-2, 2, 2)])
def test_raising_factorial_examples(y, a, expected):
    assert raising_factorial(y, a) == expected


@given(st.integers(1, 30), st.integers(0, 6))
def test_raising_factorial_is_factorial_ratio(y, a):
    assert raising_factorial(y, a) == math.factorial(y + a - 1) // math.factorial(y - 1)


nonzero = st.fractions().filter(lambda q: q != 0)


@given(nonzero, nonzero)
def test_rational_arithmetic_exact(a, b):
    q = a / b
    assert q * (b / a) == 1
    assert q.denominator > 0
    assert math.gcd(q.numerator, q.denominator) == 1


def test_exp_of_zero_is_one():
    e = RationalSeries([0], order=6).exp()
    assert e.coeffs == (1, 0, 0, 0, 0, 0, 0)


def test_derivative_of_exp_series_is_itself():
    e = RationalSeries.from_function(lambda i: Fraction(1, math.factorial(i)))
    d = e.derivative()
    assert d.coeffs[:-1] == e.coeffs[:-1]
    assert d.coeffs[-1] == 0  # lost to truncation


def test_tree_function_fixed_point():
    # g = sum n^(n-1) x^n / n! satisfies g = x exp(g)
    order = 10
    g = RationalSeries.from_function(
        lambda i: Fraction(i ** (i - 1), math.factorial(i)) if i else 0, order)
    assert g == g.exp().shift(1)


def test_exp_rejects_constant_term():
    with pytest.raises(ContractError):
        RationalSeries([1, 1]).exp()


def test_order_mismatch_rejected():
    with pytest.raises(ContractError):
        RationalSeries([1], order=3) + RationalSeries([1], order=4)


def test_multiplication_is_truncated_cauchy_product():
    a = RationalSeries([1, 1], order=4)  # 1 + x
    assert (a * a * a * a * a).coeffs == (1, 5, 10, 10, 5)


series_coeffs = st.lists(
    st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100),
    min_size=1, max_size=8,
)


@given(series_coeffs)
def test_log_exp_round_trip(cs):
    a = RationalSeries([0] + cs, order=7)
    assert a.exp().log() == a


@given(series_coeffs)
def test_exp_log_round_trip(cs):
    h = RationalSeries([1] + cs, order=7)
    assert h.log().exp() == h


@given(series_coeffs)
def test_derivative_integral_round_trip(cs):
    a = RationalSeries(cs, order=7)
    assert a.integral().derivative() == RationalSeries(cs[:7], order=7)
