from fractions import Fraction

import pytest

from chernwork.combinatorics import Partition, partitions_up_to
from chernwork.errors import NotSymmetricError
from chernwork.hattori_stong import b_coeff
from chernwork.series import exp_series, polynomial_series
from chernwork.symfunc import (
    SymPoly,
    doubilet_m_to_p,
    expand_basis_element,
    oracle_b_coeff,
    product_identity_check,
    to_basis,
)


def coords(v):
    return {lam: c for lam, c in v.coords.items() if c}


def var(N, d, i, power=1):
    return SymPoly.variable_power(N, d, i, power)


def test_expansions():
    assert expand_basis_element("e", (1,), 2) == var(2, 1, 0) + var(2, 1, 1)
    assert expand_basis_element("p", (2,), 3) == var(3, 2, 0, 2) + var(3, 2, 1, 2) + var(3, 2, 2, 2)
    m21 = expand_basis_element("m", (2, 1), 3)
    assert len(m21.terms) == 6 and all(c == 1 for c in m21.terms.values())


def test_to_basis_examples():
    p2 = expand_basis_element("p", (2,), 3)
    assert coords(to_basis(p2, "e")) == {Partition((1, 1)): 1, Partition((2,)): -2}
    assert coords(to_basis(expand_basis_element("e", (2,), 2), "e")) == {Partition((2,)): 1}
    m11 = expand_basis_element("m", (1, 1), 2)
    assert coords(to_basis(m11, "p")) == {Partition((1, 1)): Fraction(1, 2), Partition((2,)): Fraction(-1, 2)}


def test_not_symmetric():
    with pytest.raises(NotSymmetricError):
        to_basis(var(2, 2, 0, 2), "e")


@pytest.mark.parametrize("lam", [p for p in partitions_up_to(8) if p])
def test_round_trip(lam):
    v = to_basis(expand_basis_element("e", lam, lam.weight()), "e")
    assert coords(v) == {lam: 1}


def test_doubilet_examples():
    assert coords(doubilet_m_to_p((1,))) == {Partition((1,)): 1}
    assert coords(doubilet_m_to_p((2,))) == {Partition((2,)): 1}
    assert coords(doubilet_m_to_p((1, 1))) == {Partition((1, 1)): Fraction(1, 2), Partition((2,)): Fraction(-1, 2)}


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (3, 1, 1), (2, 1, 1, 1)])
def test_doubilet_vs_inversion(lam):
    assert doubilet_m_to_p(lam) == to_basis(expand_basis_element("m", lam, sum(lam)), "p")


def test_oracle_examples():
    Q = exp_series(4)
    for k in range(1, 5):
        assert oracle_b_coeff(Q, (k,), k) == 1
    assert oracle_b_coeff(Q, (1, 1), 2) == 0
    assert oracle_b_coeff(Q, (3,), 1) == Fraction(1, 2)
    assert oracle_b_coeff(polynomial_series([1, 2, 1], 2), (2,), 1) == -2


@pytest.mark.parametrize("lam,k", [((2, 1), 1), ((2, 2), 2), ((3, 1), 3), ((4,), 2)])
def test_oracle_faithful(lam, k):
    Q = exp_series(sum(lam))
    assert oracle_b_coeff(Q, lam, k) == oracle_b_coeff(Q, lam, k, num_vars=sum(lam) + 1)
    assert oracle_b_coeff(Q, lam, k) == b_coeff(lam, k)


@pytest.mark.parametrize("N,d", [(2, 2), (3, 3), (4, 4)])
def test_product_identity(N, d):
    assert product_identity_check(N, d)["holds"]


def test_sympoly_exact_only():
    with pytest.raises(TypeError):
        SymPoly(1, 1, {(1,): 0.5})
