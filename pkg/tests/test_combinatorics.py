import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chernwork.combinatorics import (
    Partition,
    SetPartition,
    bernoulli_unsigned,
    binary_weight,
    nu2,
    partitions,
    set_partition_sum,
    set_partitions,
    stirling2,
)
from chernwork.errors import LimitExceededError

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_partition_basics():
    lam = Partition((1, 3, 1))
    assert tuple(lam) == (3, 1, 1)
    assert lam.weight() == 5 and lam.length() == 3
    assert lam.multiplicity(1) == 2
    assert lam.multiplicity_factorial() == 2
    assert not lam.has_distinct_parts()
    assert lam.conjugate() == Partition((3, 1, 1))
    assert str(Partition((3, 1))) == "(3,1)"


def test_partition_counts():
    assert [len(partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions(4)[0] == Partition((4,))
    assert partitions(4)[-1] == Partition((1, 1, 1, 1))


def test_set_partition_counts():
    for n, b in enumerate(BELL):
        assert sum(1 for _ in set_partitions(n)) == b


def test_set_partition_zero_is_empty():
    (only,) = list(set_partitions(0))
    assert only.blocks == () and only.length() == 0


def test_set_partition_limit():
    with pytest.raises(LimitExceededError):
        next(set_partitions(13))
    with pytest.raises(LimitExceededError):
        next(set_partitions(5, limit=4))


def test_set_partition_example():
    p = SetPartition(((1, 3, 6), (2,), (4, 5)), 6)
    assert p.length() == 3
    assert (3, 1, 6) in p
    assert p.block_sizes() == (3, 1, 2)
    with pytest.raises(ValueError):
        SetPartition(((1, 2), (2, 3)), 3)


def test_stirling_table():
    assert stirling2(0, 0) == 1
    assert stirling2(5, 0) == 0
    assert stirling2(3, 5) == 0
    assert [stirling2(5, k) for k in range(1, 6)] == [1, 15, 25, 10, 1]
    for n in range(9):
        assert sum(stirling2(n, k) for k in range(n + 1)) == BELL[n]


def test_bernoulli():
    assert [bernoulli_unsigned(i) for i in range(1, 5)] == [
        Fraction(1, 6),
        Fraction(1, 30),
        Fraction(1, 42),
        Fraction(1, 30),
    ]
    for i in range(1, 13):
        assert nu2(Fraction(bernoulli_unsigned(i).denominator)) == 1


def test_nu2():
    assert nu2(Fraction(12)) == 2
    assert nu2(Fraction(3, 8)) == -3
    assert nu2(Fraction(-5, 3)) == 0
    assert nu2(0) == math.inf


@pytest.mark.parametrize("i", range(1, 31))
def test_legendre(i):
    # nu2(i!) = i - wt(i)
    assert nu2(math.factorial(i)) == i - binary_weight(i)


@given(st.integers(1, 10**6), st.integers(1, 10**6), st.integers(1, 10**6), st.integers(1, 10**6))
def test_nu2_multiplicative(a, b, c, d):
    p, q = Fraction(a, b), Fraction(c, d)
    assert nu2(p * q) == nu2(p) + nu2(q)


@given(st.integers(-50, 50), st.integers(1, 50), st.integers(-50, 50), st.integers(1, 50))
def test_rationals_exact(a, b, c, d):
    p, q = Fraction(a, b), Fraction(c, d)
    assert (p + q) - q == p
    assert p * q == q * p
    if q:
        assert (p / q) * q == p


@given(st.lists(st.integers(1, 4), min_size=0, max_size=8))
def test_grouped_sum_matches_direct(parts):
    def w(size, total):
        return Fraction((-1) ** size * total, math.factorial(size))

    direct = set_partition_sum(parts, w, Fraction(1), direct_max_length=99)
    grouped = set_partition_sum(parts, w, Fraction(1), direct_max_length=-1)
    assert direct == grouped
