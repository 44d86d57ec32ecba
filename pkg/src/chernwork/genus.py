"""
Complex genera as linear functionals on Chern numbers.

A genus is fixed by a monic power series Q(x).  Its value on a 2n-manifold
is sum_{|lam| = n} h_lam c_lam[M], where the h_lam come from the scalar
sequence h_i (the signed coefficients of Q'/Q) by a set-partition sum.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .combinatorics import Partition, partitions, set_partition_sum
from .errors import NonMonicError, TruncationError
from .series import PowerSeries, log_derivative_h, todd_kernel, x_over_tanh


@dataclass(frozen=True)
class ChernVector:
    """Chern numbers c_lam[M] of a 2n-manifold, keyed by partitions of n."""

    complex_dimension: int
    entries: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, v in dict(self.entries).items():
            lam = Partition(lam)
            if lam.weight() != self.complex_dimension:
                raise ValueError(f"{lam} does not have weight {self.complex_dimension}")
            if int(v) != v:
                raise ValueError(f"Chern number {v} at {lam} is not an integer")
            if v:
                clean[lam] = int(v)
        object.__setattr__(self, "entries", dict(sorted(clean.items(), reverse=True)))

    def __getitem__(self, lam) -> int:
        return self.entries.get(Partition(lam), 0)

    def support(self) -> list[Partition]:
        return list(self.entries)

    def __hash__(self):
        return hash((self.complex_dimension, tuple(self.entries.items())))


class GenusSpec:
    """A named monic series Q(x) with lazily cached scalars h_i.

    ``kernel`` is either a fixed series (usable up to its order) or a
    callable ``order -> PowerSeries`` that can produce as many terms as
    needed.
    """

    def __init__(self, name: str, kernel: PowerSeries | Callable[[int], PowerSeries]):
        self.name = name
        if isinstance(kernel, PowerSeries):
            if not kernel.is_monic():
                raise NonMonicError(f"kernel of {name} is not monic")
            fixed = kernel

            def kernel_fn(order: int) -> PowerSeries:
                if order > fixed.order:
                    raise TruncationError(f"{name} kernel is only known to order {fixed.order}")
                return fixed.truncate(order)

            self._kernel_fn = kernel_fn
            self._max_order = fixed.order
        else:
            self._kernel_fn = kernel
            self._max_order = None
        self._h: list[Fraction] = []
        self._lambda_cache: dict[Partition, Fraction] = {}
        self._lock = threading.Lock()

    def kernel(self, order: int) -> PowerSeries:
        return self._kernel_fn(order)

    def h_scalars(self, n: int) -> list[Fraction]:
        """h_1 .. h_n."""
        with self._lock:
            if n > len(self._h):
                target = max(n, 2 * len(self._h))
                if self._max_order is not None:
                    target = max(n, min(target, self._max_order))
                self._h = [Fraction(h) for h in log_derivative_h(self.kernel(target), target)]
            return self._h[:n]

    def h_scalar(self, i: int) -> Fraction:
        return self.h_scalars(i)[i - 1]

    def __repr__(self):
        return f"GenusSpec({self.name!r})"


@lru_cache(maxsize=None)
def signature_spec() -> GenusSpec:
    return GenusSpec("signature", x_over_tanh)


@lru_cache(maxsize=None)
def todd_spec() -> GenusSpec:
    return GenusSpec("todd", todd_kernel)


def genus_h_lambda(g: GenusSpec, lam) -> Fraction:
    """Coefficient of c_lam in the genus.

    h_lam = (-1)^{l}/prod m_i! * sum_pi (-1)^{l(pi)} prod_i (|pi_i|-1)! h_{lam_{pi_i}}
    """
    lam = Partition(lam)
    cached = g._lambda_cache.get(lam)
    if cached is not None:
        return cached
    h = g.h_scalars(lam.weight()) if lam else []

    def block(size, total):
        return -math.factorial(size - 1) * h[total - 1]

    s = set_partition_sum(lam, block, Fraction(1))
    value = Fraction((-1) ** len(lam), lam.multiplicity_factorial()) * s
    g._lambda_cache[lam] = value
    return value


def genus_table(g: GenusSpec, n: int) -> dict[Partition, Fraction]:
    """All nonzero h_lam with |lam| = n."""
    out = {}
    for lam in partitions(n):
        v = genus_h_lambda(g, lam)
        if v:
            out[lam] = v
    return out


def evaluate_genus(g: GenusSpec, v: ChernVector) -> Fraction:
    return sum((genus_h_lambda(g, lam) * c for lam, c in v.entries.items()), Fraction(0))
