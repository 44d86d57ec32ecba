import math
from fractions import Fraction

import pytest

from chernwork.combinatorics import Partition, partitions_up_to
from chernwork.errors import LimitExceededError
from chernwork.genus import ChernVector
from chernwork.hattori_stong import (
    GammaMonomial,
    b_coeff,
    b_coeff_general,
    b_polynomial,
    check_realizable,
    gamma_ch_expansion,
    gamma_monomials,
    integrality_basis,
    integrality_functional,
)
from chernwork.series import exp_series, polynomial_series


def test_b_examples():
    for k in range(1, 7):
        assert b_coeff((k,), k) == 1
    assert b_coeff((1, 1), 2) == 0
    assert b_coeff((3,), 2) == Fraction(-3, 2)
    assert b_coeff((2, 1), 1) == Fraction(-1, 2)


@pytest.mark.parametrize("i", range(1, 6))
def test_two_part_laws_at_k1(i):
    # these closed forms hold for k = 1 only
    assert b_coeff((i, i), 1) == Fraction(1, 2 * math.factorial(2 * i - 1))
    for j in range(1, i):
        assert b_coeff((i, j), 1) == Fraction((-1) ** (i + j), math.factorial(i + j - 1))


@pytest.mark.parametrize("lam", [p for p in partitions_up_to(8) if p])
def test_t_degree_bound(lam):
    poly = b_polynomial(lam)
    assert poly.degree() <= lam.weight()
    assert min(e for e, _ in poly.items()) >= 1


def test_general_examples():
    one_plus_x = polynomial_series([1, 1], 4)
    for lam in partitions_up_to(4):
        if not lam:
            continue
        k = lam.weight()
        assert b_coeff_general(one_plus_x, lam, k) == (1 if len(lam) == 1 else 0)
    assert b_coeff_general(polynomial_series([1, 2, 1], 2), (2,), 1) == -2


@pytest.mark.parametrize("lam", [p for p in partitions_up_to(6) if p])
def test_general_specializes_to_exp(lam):
    Q = exp_series(lam.weight())
    for k in range(1, lam.weight() + 1):
        assert b_coeff_general(Q, lam, k) == b_coeff(lam, k)


def test_gamma_ch_expansion():
    assert gamma_ch_expansion(1, 2) == {Partition((1,)): 1, Partition((2,)): -1, Partition((1, 1)): Fraction(1, 2)}
    assert gamma_ch_expansion(2, 2) == {Partition((2,)): 1}
    assert gamma_ch_expansion(3, 2) == {}


def test_todd_functionals():
    f1 = integrality_functional((), 1)
    assert f1.coeffs == {Partition((1,)): Fraction(1, 2)}
    f2 = integrality_functional((), 2)
    assert f2.coeffs == {Partition((1, 1)): Fraction(1, 12), Partition((2,)): Fraction(1, 12)}


@pytest.mark.parametrize("k", [2, 3])
def test_gamma_functional_law(k):
    f = integrality_functional((1, 1), 2 * k).restricted([(k, k), (2 * k,)])
    assert f[(k, k)] == Fraction(1, math.factorial(k - 1) ** 2)
    assert f[(2 * k,)] == 0


def test_basis_counts():
    assert [len(integrality_basis(n)) for n in range(5)] == [1, 2, 4, 7, 12]
    assert [str(K) for K in gamma_monomials(2)] == ["{}", "{1}", "{2}", "{1,1}"]
    assert GammaMonomial((2, 1)) == GammaMonomial((1, 2))


def test_basis_limit():
    with pytest.raises(LimitExceededError):
        integrality_basis(9)
    with pytest.raises(LimitExceededError):
        integrality_basis(4, limit=3)


def test_check_examples():
    assert check_realizable(ChernVector(1, {(1,): 2}))
    bad = check_realizable(ChernVector(1, {(1,): 1}))
    assert not bad
    assert list(bad.violations) == [(GammaMonomial(()), Fraction(1, 2))]
    assert check_realizable(ChernVector(2, {(1, 1): 9, (2,): 3}))
    bad = check_realizable(ChernVector(2, {(1, 1): 0, (2,): 1}))
    assert not bad and [v for _, v in bad.violations] == [Fraction(1, 12)]
