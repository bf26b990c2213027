from fractions import Fraction

import pytest

from pfhull.errors import ContractError, ResourceBoundError
from pfhull.lattice import lattice_count
from pfhull.volume import (
    egf_identity_check,
    ehrhart_count,
    interpolate_leading,
    volume,
    volume_oracle,
    volume_table,
)

KNOWN = [Fraction(0), Fraction(1, 2), Fraction(4), Fraction(159, 4),
         Fraction(492), Fraction(58835, 8), Fraction(129237),
         Fraction(41822865, 16)]


def test_volume_known_values():
    assert [volume(n) for n in range(1, 9)] == KNOWN
    assert volume(0) == 1


def test_volume_table():
    t = volume_table(4)
    assert t == {0: 1, 1: 0, 2: Fraction(1, 2), 3: 4, 4: Fraction(159, 4)}


def test_volume_denominators_are_powers_of_two():
    for n in range(1, 30):
        d = volume(n).denominator
        assert d & (d - 1) == 0


def test_volume_rejects_negative():
    with pytest.raises(ContractError):
        volume(-1)


def test_volume_large_n_is_fast_and_exact():
    v = volume(100)
    assert isinstance(v, Fraction) and v > 0


def test_volume_n2_is_triangle():
    # conv{(1,1),(1,2),(2,1)} is a right triangle with legs 1
    assert volume(2) == Fraction(1, 2)


@pytest.mark.parametrize("order", [1, 2, 8, 10, 14])
def test_egf_identity(order):
    ok, residual = egf_identity_check(order)
    assert ok
    assert all(c == 0 for c in residual.coeffs)
    assert len(residual.coeffs) == order + 1


def test_egf_rejects_bad_order():
    with pytest.raises(ContractError):
        egf_identity_check(0)


def test_ehrhart_examples():
    assert ehrhart_count(3, 1) == 17
    assert ehrhart_count(2, 2) == 6
    for n in range(1, 6):
        assert ehrhart_count(n, 0) == 1


def test_ehrhart_triangle_by_pick():
    # m P_2 is a right triangle with legs m: (m+1)(m+2)/2 lattice points
    for m in range(0, 8):
        assert ehrhart_count(2, m) == (m + 1) * (m + 2) // 2


@pytest.mark.parametrize("n", range(1, 7))
def test_ehrhart_at_one_is_lattice_count(n):
    assert ehrhart_count(n, 1) == lattice_count(n, "bruteforce")


@pytest.mark.parametrize("n", range(1, 5))
def test_ehrhart_nondecreasing(n):
    counts = [ehrhart_count(n, m) for m in range(n + 2)]
    assert counts == sorted(counts)


def test_ehrhart_shards_invariant():
    assert ehrhart_count(4, 3, shards=4) == ehrhart_count(4, 3)


def test_ehrhart_contract():
    with pytest.raises(ContractError):
        ehrhart_count(3, -1)
    with pytest.raises(ResourceBoundError):
        ehrhart_count(5, 5, budget=10)


def test_interpolate_leading():
    # 3 m^2 + 2 m + 1 sampled at m = 0, 1, 2
    assert interpolate_leading([1, 6, 17]) == 3
    assert interpolate_leading([5]) == 5
    cubic = [Fraction(m ** 3, 6) - m for m in range(4)]
    assert interpolate_leading(cubic) == Fraction(1, 6)


@pytest.mark.parametrize("n", range(1, 6))
def test_volume_oracle(n):
    assert volume_oracle(n) == volume(n)


def test_volume_oracle_bounds():
    with pytest.raises(ResourceBoundError):
        volume_oracle(6)


def test_ehrhart_polynomial_degree():
    # with one more sample the n+1-st difference vanishes
    n = 3
    counts = [ehrhart_count(n, m) for m in range(n + 2)]
    diffs = counts
    for _ in range(n + 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    assert diffs == [0]
    assert interpolate_leading(counts[:n + 1]) == volume(n)
