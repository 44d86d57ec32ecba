"""
Truncated univariate power series with exact coefficients.

A :class:`PowerSeries` knows its coefficients only up to ``order``
(inclusive).  Asking for a coefficient beyond that raises
:class:`TruncationError` rather than returning a silent zero, and every
operation returns a series whose order is what the inputs actually
determine.

Coefficients are normally :class:`Fraction`, but may also be
:class:`TPolynomial`, which is how a second formal variable ``t`` is carried
when extracting coefficients of Q_t'/Q_t.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

from .combinatorics import stirling2
from .errors import NonMonicError, NonNilpotentError, NotInvertibleError, TruncationError


class TPolynomial:
    """Polynomial in one formal variable ``t`` with rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            if e < 0:
                raise ValueError("negative t-exponent")
            v = Fraction(v)
            if v:
                c[int(e)] = v
        self._c = c

    @classmethod
    def constant(cls, value) -> TPolynomial:
        return cls({0: value})

    @classmethod
    def t(cls) -> TPolynomial:
        return cls({1: 1})

    def coefficient(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    __getitem__ = coefficient

    def degree(self) -> int | float:
        return max(self._c) if self._c else -math.inf

    def items(self):
        return sorted(self._c.items())

    def __bool__(self):
        return bool(self._c)

    @staticmethod
    def _lift(other):
        if isinstance(other, TPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return TPolynomial({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return TPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return TPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TPolynomial({e: v * other for e, v in self._c.items()})
        if not isinstance(other, TPolynomial):
            return NotImplemented
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return TPolynomial(c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        out = TPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def reciprocal(self) -> TPolynomial:
        if self.degree() != 0:
            raise NotInvertibleError(f"{self!r} is not a nonzero constant")
        return TPolynomial.constant(1 / self._c[0])

    def __call__(self, t):
        return sum((v * t**e for e, v in self._c.items()), Fraction(0))

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        if not self._c:
            return "TPolynomial(0)"
        terms = []
        for e, v in self.items():
            terms.append(f"{v}" if e == 0 else f"{v}*t^{e}")
        return "TPolynomial(" + " + ".join(terms) + ")"


def _reciprocal(c):
    if isinstance(c, TPolynomial):
        return c.reciprocal()
    if c == 0:
        raise NotInvertibleError("constant term is zero")
    return 1 / Fraction(c)


def _coerce(c):
    return c if isinstance(c, TPolynomial) else Fraction(c)


class PowerSeries:
    """sum_{j <= order} c_j x^j, known exactly up to ``order``."""

    __slots__ = ("_coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = [_coerce(c) for c in coeffs]
        if not coeffs:
            coeffs = [Fraction(0)]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        zero = coeffs[0] * 0
        coeffs = coeffs[: order + 1] + [zero] * (order + 1 - len(coeffs))
        self._coeffs = tuple(coeffs)
        self.order = order

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def coefficient(self, j: int):
        if j < 0:
            raise IndexError("negative exponent")
        if j > self.order:
            raise TruncationError(f"coefficient {j} requested from series of order {self.order}")
        return self._coeffs[j]

    __getitem__ = coefficient

    def _zero(self):
        return self._coeffs[0] * 0

    def is_monic(self) -> bool:
        return self._coeffs[0] == 1

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise TruncationError(f"cannot extend series of order {self.order} to {order}")
        return PowerSeries(self._coeffs[: order + 1], order)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return self + PowerSeries([other], self.order)
        n = min(self.order, other.order)
        return PowerSeries([self._coeffs[j] + other._coeffs[j] for j in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self._coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self._coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out = []
        for j in range(n + 1):
            acc = a[0] * b[j]
            for i in range(1, j + 1):
                acc = acc + a[i] * b[j - i]
            out.append(acc)
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PowerSeries:
        if k < 0:
            return self.inverse() ** (-k)
        out = PowerSeries([self._coeffs[0] * 0 + 1], self.order)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> PowerSeries:
        a = self._coeffs
        b0 = _reciprocal(a[0])
        b = [b0]
        for j in range(1, self.order + 1):
            acc = a[1] * b[j - 1]
            for i in range(2, j + 1):
                acc = acc + a[i] * b[j - i]
            b.append(-(b0 * acc))
        return PowerSeries(b, self.order)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.inverse()
        return self * _reciprocal(other)

    def derivative(self) -> PowerSeries:
        if self.order == 0:
            # nothing about the derivative is known
            raise TruncationError("derivative of an order-0 series")
        return PowerSeries([j * self._coeffs[j] for j in range(1, self.order + 1)], self.order - 1)

    def shift_down(self) -> PowerSeries:
        """Divide by x; the constant term must vanish."""
        if self._coeffs[0] != 0:
            raise ValueError("cannot divide by x: nonzero constant term")
        if self.order == 0:
            raise TruncationError("shift of an order-0 series")
        return PowerSeries(self._coeffs[1:], self.order - 1)

    def compose(self, g: PowerSeries) -> PowerSeries:
        """Substitute x -> g(x); g must have zero constant term."""
        if g._coeffs[0] != 0:
            raise NonNilpotentError("composition argument must have zero constant term")
        n = min(self.order, g.order)
        g = g.truncate(n)
        out = PowerSeries([self._coeffs[n]], n)
        for j in range(n - 1, -1, -1):
            out = out * g + self._coeffs[j]
        return out

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.order, self._coeffs))

    def __repr__(self):
        return f"PowerSeries({list(map(str, self._coeffs))}, order={self.order})"


def series_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f * g


def series_inverse(f: PowerSeries) -> PowerSeries:
    return f.inverse()


def series_derivative(f: PowerSeries) -> PowerSeries:
    return f.derivative()


def series_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f.compose(g)


def x_series(order: int) -> PowerSeries:
    return PowerSeries([0, 1], order)


def exp_series(order: int) -> PowerSeries:
    return PowerSeries([Fraction(1, math.factorial(j)) for j in range(order + 1)], order)


def x_over_sinh(order: int) -> PowerSeries:
    """x / sinh(x)"""
    e = exp_series(order + 1)
    sinh_over_x = ((e - e.inverse()) * Fraction(1, 2)).shift_down()
    return sinh_over_x.inverse()


def x_over_tanh(order: int) -> PowerSeries:
    """x / tanh(x) = cosh(x) * x / sinh(x); the signature kernel."""
    e = exp_series(order + 1)
    cosh = ((e + e.inverse()) * Fraction(1, 2)).truncate(order)
    return cosh * x_over_sinh(order)


def todd_kernel(order: int) -> PowerSeries:
    """x / (1 - e^{-x})"""
    e = exp_series(order + 1)
    return (1 - e.inverse()).shift_down().inverse()


def polynomial_series(coeffs: Iterable, order: int) -> PowerSeries:
    """A polynomial viewed as a power series known to ``order``."""
    coeffs = list(coeffs)
    if len(coeffs) > order + 1 and any(Fraction(c) for c in coeffs[order + 1 :]):
        raise TruncationError("polynomial has terms beyond the requested order")
    return PowerSeries(coeffs, order)


def log_derivative_coefficients(Q: PowerSeries, N: int) -> list:
    """Coefficients of x^0 .. x^{N-1} in Q'(x)/Q(x)."""
    if not Q.is_monic():
        raise NonMonicError("series must have constant term 1")
    if N < 1:
        raise ValueError("N must be positive")
    if Q.order < N:
        raise TruncationError(f"need order >= {N}, series has order {Q.order}")
    Q = Q.truncate(N)
    L = Q.derivative() * Q.inverse()
    return [L[j] for j in range(N)]


def log_derivative_h(Q: PowerSeries, N: int) -> list:
    """h_1 .. h_N with sum_i (-1)^{i-1} h_i x^{i-1} = Q'/Q.

    For ``Q = prod_j (1 + y_j x)`` these are the power sums of the y_j.
    """
    coeffs = log_derivative_coefficients(Q, N)
    return [c if i % 2 == 0 else -c for i, c in enumerate(coeffs)]


def gamma_kernel_coeff(k: int) -> TPolynomial:
    """Coefficient of x^{k-1} in Q_t'/Q_t for Q_t = 1 + t(e^x - 1), closed form.

    t * sum_{i<k} S(k, k-i) / (C(k-1, i) i!) * (-t)^{k-1-i}
    """
    if k < 1:
        raise ValueError("k must be positive")
    c = {}
    for i in range(k):
        e = k - 1 - i
        c[e + 1] = Fraction((-1) ** e * stirling2(k, k - i), math.comb(k - 1, i) * math.factorial(i))
    return TPolynomial(c)


def t_deformed(Q: PowerSeries) -> PowerSeries:
    """Q_t(x) = 1 + sum_i t a_i x^i, as a series with TPolynomial coefficients."""
    if not Q.is_monic():
        raise NonMonicError("series must have constant term 1")
    t = TPolynomial.t()
    coeffs = [TPolynomial.constant(1)] + [t * Fraction(a) for a in Q.coefficients[1:]]
    return PowerSeries(coeffs, Q.order)


def gamma_kernel_coeff_by_extraction(k: int) -> TPolynomial:
    """Same quantity as :func:`gamma_kernel_coeff`, by expanding the series."""
    if k < 1:
        raise ValueError("k must be positive")
    Qt = t_deformed(exp_series(k))
    return log_derivative_coefficients(Qt, k)[k - 1]
