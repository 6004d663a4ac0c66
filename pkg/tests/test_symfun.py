from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import prod

import pytest
from hypothesis import given, strategies as st

from kerovpoly.symfun import (
    arrangements,
    mhat_j,
    mhat_lambda,
    partitions_of,
    stirling2,
    validate_partition,
)


def brute_partitions(d):
    found = set()
    for length in range(d + 1):
        for parts in combinations_with_replacement(range(1, d + 1), length):
            if sum(parts) == d:
                found.add(tuple(sorted(parts, reverse=True)))
    return found


def brute_stirling(j, i):
    # surjections from a j-set onto an i-set, divided by i!
    if i == 0:
        return int(j == 0)
    surj = sum(1 for f in product(range(i), repeat=j) if len(set(f)) == i)
    return surj // prod(range(1, i + 1))


def brute_mhat(lam, k):
    # m_lam(1..k-1): sum over injective index tuples, divided by the symmetry of lam
    total = 0
    for idx in permutations(range(1, k), len(lam)):
        total += prod(i**p for i, p in zip(idx, lam))
    sym = prod(prod(range(1, m + 1)) for m in Counter(lam).values())
    return Fraction(total, sym)


def test_partitions_of_zero():
    assert partitions_of(0) == [()]


def test_partitions_of_four_in_reverse_lex_order():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_of_two():
    assert partitions_of(2) == [(2,), (1, 1)]


@pytest.mark.parametrize("d", range(11))
def test_partitions_match_enumeration(d):
    parts = partitions_of(d)
    assert len(parts) == len(set(parts))
    assert set(parts) == brute_partitions(d)


def test_partitions_with_smallest_part():
    assert partitions_of(6, smallest_part=2) == [(6,), (4, 2), (3, 3), (2, 2, 2)]


def test_validate_partition():
    assert validate_partition([3, 1, 1]) == (3, 1, 1)
    with pytest.raises(ValueError):
        validate_partition([1, 2])
    with pytest.raises(ValueError):
        validate_partition([2, 0])


def test_arrangements():
    assert arrangements((2, 1, 1)) == 3
    assert arrangements(()) == 1


def test_stirling_examples():
    assert all(stirling2(j, 1) == 1 for j in range(1, 10))
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert stirling2(0, 0) == 1


@pytest.mark.parametrize("j", range(0, 7))
def test_stirling_matches_surjection_count(j):
    for i in range(0, j + 2):
        assert stirling2(j, i) == brute_stirling(j, i)


def test_mhat_j_examples():
    assert mhat_j(1, 5) == 10
    assert mhat_j(2, 3) == 5
    assert all(mhat_j(j, 1) == 0 for j in range(1, 6))


def test_mhat_j_matches_power_sums():
    for j in range(1, 9):
        for k in range(1, 31):
            assert mhat_j(j, k) == sum(i**j for i in range(1, k))


def test_integer_power_closed_forms():
    for k in range(1, 31):
        assert mhat_j(1, k) == Fraction((k - 1) * k, 2)
        assert mhat_j(2, k) == Fraction((k - 1) * k * (2 * k - 1), 6)
        assert mhat_j(3, k) == Fraction((k - 1) ** 2 * k**2, 4)
        assert mhat_j(4, k) == Fraction((k - 1) * k * (2 * k - 1) * (3 * k * k - 3 * k - 1), 30)


def test_mhat_11():
    assert mhat_lambda((1, 1), 3) == 2
    m1, m2 = mhat_j(1, 3), mhat_j(2, 3)
    assert mhat_lambda((1, 1), 3) == Fraction(m1 * m1 - m2, 2)


def test_empty_and_degenerate():
    assert mhat_lambda((), 1) == 1
    assert mhat_lambda((), 7) == 1
    assert mhat_lambda((2,), 1) == 0
    # more parts than nonzero variables
    assert mhat_lambda((1, 1, 1), 3) == 0
    assert mhat_lambda((2, 2, 1, 1), 4) == 0


@pytest.mark.parametrize("k", [1, 2, 3, 5, 8, 12])
def test_mhat_lambda_matches_brute_force(k):
    for d in range(1, 7):
        for lam in partitions_of(d):
            if len(lam) > 4 and k > 8:
                continue  # enumeration too large; covered at smaller k
            assert mhat_lambda(lam, k) == brute_mhat(lam, k), (lam, k)


def test_degree_four_relations():
    for k in range(1, 21):
        m1, m2, m3, m4 = (mhat_j(j, k) for j in range(1, 5))
        assert mhat_lambda((3, 1), k) == m3 * m1 - m4
        assert mhat_lambda((2, 2), k) == Fraction(m2 * m2 - m4, 2)
        assert mhat_lambda((2, 1, 1), k) == Fraction(m2 * m1 * m1 - 2 * m3 * m1 - m2 * m2 + 2 * m4, 2)
        assert mhat_lambda((1, 1, 1, 1), k) == Fraction(
            m1**4 - 6 * m2 * m1 * m1 + 8 * m3 * m1 + 3 * m2 * m2 - 6 * m4, 24
        )


@given(st.integers(2, 9), st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_mhat_lambda_is_integral_and_nonnegative(k, parts):
    lam = tuple(sorted(parts, reverse=True))
    value = mhat_lambda(lam, k)
    assert value == int(value) and value >= 0
