import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chernwork.combinatorics import bernoulli_unsigned
from chernwork.errors import NonMonicError, NonNilpotentError, TruncationError
from chernwork.series import (
    PowerSeries,
    TPolynomial,
    exp_series,
    gamma_kernel_coeff,
    gamma_kernel_coeff_by_extraction,
    log_derivative_h,
    polynomial_series,
    series_compose,
    series_derivative,
    series_inverse,
    series_mul,
    todd_kernel,
    x_over_tanh,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def test_inverse_geometric():
    g = series_inverse(PowerSeries([1, -1], 6))
    assert g.coefficients == tuple(Fraction(1) for _ in range(7))


def test_derivative():
    d = series_derivative(PowerSeries([1, 0, 1], 4))
    assert d.coefficients[:3] == (0, 2, 0)
    assert d.order == 3


def test_compose():
    sq = PowerSeries([0, 0, 1], 6)
    assert series_compose(exp_series(6), sq)[4] == Fraction(1, 2)
    with pytest.raises(NonNilpotentError):
        series_compose(exp_series(4), PowerSeries([1, 1], 4))


def test_truncation_discipline():
    a, b = exp_series(5), exp_series(3)
    assert (a * b).order == 3
    assert (a + b).order == 3
    with pytest.raises(TruncationError):
        b[4]


def test_kernels():
    assert x_over_tanh(6).coefficients == (1, 0, Fraction(1, 3), 0, Fraction(-1, 45), 0, Fraction(2, 945))
    assert todd_kernel(4).coefficients == (1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720))


@given(st.lists(small, min_size=8, max_size=10))
def test_inverse_property(tail):
    Q = PowerSeries([1, *tail])
    one = series_mul(Q, series_inverse(Q))
    assert one.coefficients == (1,) + (0,) * Q.order


def test_inverse_needs_unit():
    with pytest.raises(ZeroDivisionError):
        PowerSeries([0, 1], 3).inverse()


def test_log_derivative_examples():
    assert log_derivative_h(polynomial_series([1, 1], 6), 6) == [1] * 6
    assert log_derivative_h(exp_series(6), 6) == [1, 0, 0, 0, 0, 0]
    h = log_derivative_h(x_over_tanh(6), 4)
    assert h == [0, Fraction(-2, 3), 0, Fraction(14, 45)]


def test_log_derivative_errors():
    with pytest.raises(NonMonicError):
        log_derivative_h(PowerSeries([2, 1], 4), 3)
    with pytest.raises(TruncationError):
        log_derivative_h(exp_series(3), 5)


def test_signature_h_closed_form():
    h = log_derivative_h(x_over_tanh(20), 20)
    for i in range(1, 11):
        assert h[2 * i - 2] == 0
        want = Fraction((-1) ** i * 2 ** (2 * i + 1) * (2 ** (2 * i - 1) - 1)) * bernoulli_unsigned(i)
        assert h[2 * i - 1] == want / math.factorial(2 * i)


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=1, max_size=5, unique=True))
def test_newton_cauchy(ys):
    # for Q = prod (1 + y x) the h_i are the power sums of the y
    Q = PowerSeries([1], 9)
    for y in ys:
        Q = Q * PowerSeries([1, y], 9)
    h = log_derivative_h(Q, 8)
    assert h == [sum(y**i for y in ys) for i in range(1, 9)]


def test_gamma_kernel_small():
    t = TPolynomial.t()
    assert gamma_kernel_coeff(1) == t
    assert gamma_kernel_coeff(2) == t - t * t


@pytest.mark.parametrize("k", range(1, 11))
def test_gamma_kernel_two_paths(k):
    assert gamma_kernel_coeff(k) == gamma_kernel_coeff_by_extraction(k)


def test_tpolynomial():
    t = TPolynomial.t()
    p = (1 + t) ** 3
    assert p(Fraction(1)) == 8
    assert p.degree() == 3
    assert TPolynomial({}).degree() == -math.inf
    assert (p - p) == 0
