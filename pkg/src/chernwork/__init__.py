"""Exact Chern-number arithmetic: gamma-operation coefficients, complex genera,
Hattori-Stong integrality conditions and signature parity checks."""

from .combinatorics import (
    INFINITY,
    Partition,
    SetPartition,
    bernoulli_unsigned,
    binary_weight,
    nu2,
    partitions,
    set_partitions,
    stirling2,
)
from .genus import ChernVector, GenusSpec, evaluate_genus, genus_h_lambda, signature_spec, todd_spec
from .hattori_stong import (
    GammaMonomial,
    LinearFunctional,
    b_coeff,
    b_coeff_general,
    check_realizable,
    gamma_ch_expansion,
    integrality_basis,
    integrality_functional,
)
from .series import PowerSeries, TPolynomial, gamma_kernel_coeff, log_derivative_h

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "ChernVector",
    "GammaMonomial",
    "GenusSpec",
    "LinearFunctional",
    "Partition",
    "PowerSeries",
    "SetPartition",
    "TPolynomial",
    "b_coeff",
    "b_coeff_general",
    "bernoulli_unsigned",
    "binary_weight",
    "check_realizable",
    "evaluate_genus",
    "gamma_ch_expansion",
    "gamma_kernel_coeff",
    "genus_h_lambda",
    "integrality_basis",
    "integrality_functional",
    "log_derivative_h",
    "nu2",
    "partitions",
    "set_partitions",
    "signature_spec",
    "stirling2",
    "todd_spec",
]
