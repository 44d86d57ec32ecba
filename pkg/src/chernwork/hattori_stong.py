"""
Chern-character coefficients of gamma operations and the integrality
conditions they generate.

``b_coeff(lam, k)`` is the coefficient of c_lam in ch(gamma^k(E - rank E)),
equivalently of e_lam in e_k(e^{x_1} - 1, e^{x_2} - 1, ...).  It is read off
the t^k term of a polynomial in t assembled from a set-partition sum with a
Stirling-number kernel per block.  ``b_coeff_general`` does the same for any
monic Q in place of e^x.

An integer vector of Chern numbers in complex dimension n is realizable by a
stably almost-complex manifold exactly when

    integral of ch(gamma^{k_1}) ... ch(gamma^{k_i}) td

is an integer for every multiset {k_1, ..., k_i}.  Since ch(gamma^k) starts
in degree k, only multisets with k_1 + ... + k_i <= n can contribute, and
those are the conditions :func:`integrality_basis` produces.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .combinatorics import Partition, partitions, partitions_up_to, set_partition_sum
from .config import dim_limit
from .errors import LimitExceededError, NonMonicError, TruncationError
from .genus import ChernVector, genus_h_lambda, todd_spec
from .series import PowerSeries, TPolynomial, gamma_kernel_coeff, log_derivative_coefficients, t_deformed


@dataclass(frozen=True, order=True)
class GammaMonomial:
    """A multiset {k_1, ..., k_i} of positive integers; empty means the bare Todd condition."""

    indices: tuple[int, ...] = ()

    def __post_init__(self):
        idx = tuple(sorted(int(k) for k in self.indices))
        if idx and idx[0] < 1:
            raise ValueError("gamma indices must be positive")
        object.__setattr__(self, "indices", idx)

    def degree(self) -> int:
        return sum(self.indices)

    def sort_key(self):
        return (len(self.indices), self.indices)

    def __str__(self):
        return "{" + ",".join(map(str, self.indices)) + "}"


@dataclass(frozen=True)
class LinearFunctional:
    """Rational coefficients on the Chern numbers of complex dimension n."""

    complex_dimension: int
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in dict(self.coeffs).items():
            lam = Partition(lam)
            if lam.weight() != self.complex_dimension:
                raise ValueError(f"{lam} does not have weight {self.complex_dimension}")
            if c:
                clean[lam] = Fraction(c)
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), reverse=True)))

    def __getitem__(self, lam) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def __call__(self, v: ChernVector) -> Fraction:
        if v.complex_dimension != self.complex_dimension:
            raise ValueError("dimension mismatch")
        return sum((c * v[lam] for lam, c in self.coeffs.items()), Fraction(0))

    def restricted(self, support) -> LinearFunctional:
        support = {Partition(s) for s in support}
        return LinearFunctional(self.complex_dimension, {k: v for k, v in self.coeffs.items() if k in support})

    def denominator(self) -> int:
        return math.lcm(1, *(c.denominator for c in self.coeffs.values()))


def _prefactor(lam: Partition) -> Fraction:
    return Fraction((-1) ** (lam.weight() - len(lam)), lam.multiplicity_factorial())


@lru_cache(maxsize=None)
def b_polynomial(lam: Partition) -> TPolynomial:
    """sum_k b^(k)_lam t^k, from the closed formula with Stirling-number block kernels."""
    lam = Partition(lam)

    def block(size, total):
        return gamma_kernel_coeff(total) * math.factorial(size - 1)

    return set_partition_sum(lam, block, TPolynomial.constant(1)) * _prefactor(lam)


def b_coeff(lam, k: int) -> Fraction:
    """Coefficient of c_lam in ch(gamma^k(E - rank E))."""
    if k < 1:
        raise ValueError("k must be positive")
    return b_polynomial(Partition(lam)).coefficient(k)


def b_polynomial_general(Q: PowerSeries, lam) -> TPolynomial:
    """sum_k b^(k)_lam(Q) t^k, block factors read from Q_t'/Q_t."""
    lam = Partition(lam)
    if not Q.is_monic():
        raise NonMonicError("Q must have constant term 1")
    n = lam.weight()
    if Q.order < n:
        raise TruncationError(f"series order {Q.order} is below weight {n}")
    if n == 0:
        return TPolynomial.constant(1)
    logd = log_derivative_coefficients(t_deformed(Q.truncate(n)), n)

    def block(size, total):
        return logd[total - 1] * math.factorial(size - 1)

    return set_partition_sum(lam, block, TPolynomial.constant(1)) * _prefactor(lam)


def b_coeff_general(Q: PowerSeries, lam, k: int) -> Fraction:
    """Coefficient of e_lam in e_k(Q(x_1) - 1, Q(x_2) - 1, ...)."""
    if k < 1:
        raise ValueError("k must be positive")
    return b_polynomial_general(Q, lam).coefficient(k)


def gamma_ch_expansion(k: int, n: int) -> dict[Partition, Fraction]:
    """Nonzero coefficients of ch(gamma^k) through Chern degree n.

    Partitions of weight below k never appear.
    """
    if k < 1:
        raise ValueError("k must be positive")
    out = {}
    for w in range(k, n + 1):
        for lam in partitions(w):
            b = b_coeff(lam, k)
            if b:
                out[lam] = b
    return out


def _truncated_product(a: Mapping, b: Mapping, n: int) -> dict:
    out: dict = {}
    for l1, c1 in a.items():
        w1 = l1.weight()
        for l2, c2 in b.items():
            if w1 + l2.weight() > n:
                continue
            lam = l1.union(l2)
            out[lam] = out.get(lam, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def todd_expansion(n: int) -> dict[Partition, Fraction]:
    """The Todd class through degree n, in Chern monomials."""
    td = todd_spec()
    out = {}
    for lam in partitions_up_to(n):
        h = genus_h_lambda(td, lam)
        if h:
            out[lam] = h
    return out


def integrality_functional(K: GammaMonomial | tuple, n: int) -> LinearFunctional:
    """The degree-n part of ch(gamma^{k_1}) ... ch(gamma^{k_i}) td, as a functional."""
    if not isinstance(K, GammaMonomial):
        K = GammaMonomial(tuple(K))
    acc: dict = {Partition(()): Fraction(1)}
    for k in K.indices:
        if k > n:
            return LinearFunctional(n)
        acc = _truncated_product(acc, gamma_ch_expansion(k, n), n)
    acc = _truncated_product(acc, todd_expansion(n), n)
    return LinearFunctional(n, {lam: c for lam, c in acc.items() if lam.weight() == n})


def gamma_monomials(n: int) -> list[GammaMonomial]:
    """Multisets of positive integers with sum <= n, by size then lexicographically."""
    out = [GammaMonomial(tuple(reversed(p))) for w in range(n + 1) for p in partitions(w)]
    return sorted(out, key=GammaMonomial.sort_key)


_basis_lock = threading.Lock()
_basis_cache: dict[int, list] = {}


def integrality_basis(n: int, limit: int | None = None) -> list[tuple[GammaMonomial, LinearFunctional]]:
    """One functional per multiset of gamma indices with sum <= n.

    The list is not reduced: dependent conditions are kept.
    """
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if n > dim_limit(limit):
        raise LimitExceededError(f"complex dimension {n} exceeds limit {dim_limit(limit)}")
    with _basis_lock:
        if n not in _basis_cache:
            _basis_cache[n] = [(K, integrality_functional(K, n)) for K in gamma_monomials(n)]
        return list(_basis_cache[n])


@dataclass(frozen=True)
class RealizabilityReport:
    complex_dimension: int
    realizable: bool
    violations: tuple[tuple[GammaMonomial, Fraction], ...]
    checked: int

    def __bool__(self):
        return self.realizable


def check_realizable(v: ChernVector, limit: int | None = None) -> RealizabilityReport:
    """Apply every integrality condition; report the non-integral ones."""
    basis = integrality_basis(v.complex_dimension, limit)
    violations = []
    for K, f in basis:
        value = f(v)
        if value.denominator != 1:
            violations.append((K, value))
    return RealizabilityReport(v.complex_dimension, not violations, tuple(violations), len(basis))
