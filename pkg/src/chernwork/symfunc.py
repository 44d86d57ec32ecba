"""
Brute-force symmetric functions in finitely many variables.

This module is the independent check on the closed formulas elsewhere in
the package, so it works the slow, literal way: polynomials are dictionaries
from exponent vectors to coefficients, basis elements are expanded from
their definitions, and coordinates are found by solving the triangular
transition system against monomial coefficients.  Symmetric functions of
degree <= n are faithfully represented once there are at least n variables.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Mapping

from .combinatorics import Partition, partitions, set_partition_sum
from .errors import NotSymmetricError, TruncationError
from .series import PowerSeries

BASIS_TAGS = ("e", "p", "m")


class SymPoly:
    """Polynomial in ``num_vars`` variables, truncated at total degree ``max_degree``.

    Symmetry is not assumed; see :meth:`is_symmetric`.
    """

    __slots__ = ("num_vars", "max_degree", "terms")

    def __init__(self, num_vars: int, max_degree: int, terms: Mapping[tuple, object] | None = None):
        self.num_vars = num_vars
        self.max_degree = max_degree
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} does not have {num_vars} entries")
            c = _exact(c)
            if c and sum(exp) <= max_degree:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, num_vars, max_degree, terms) -> SymPoly:
        # terms already validated, truncated and free of zeros
        out = cls.__new__(cls)
        out.num_vars = num_vars
        out.max_degree = max_degree
        out.terms = terms
        return out

    @classmethod
    def constant(cls, num_vars, max_degree, value=1) -> SymPoly:
        return cls(num_vars, max_degree, {(0,) * num_vars: value})

    @classmethod
    def variable_power(cls, num_vars, max_degree, index, power, coeff=1) -> SymPoly:
        exp = [0] * num_vars
        exp[index] = power
        return cls(num_vars, max_degree, {tuple(exp): coeff})

    def _check(self, other):
        if not isinstance(other, SymPoly) or other.num_vars != self.num_vars:
            raise TypeError("incompatible polynomials")

    def __add__(self, other):
        self._check(other)
        bound = min(self.max_degree, other.max_degree)
        terms = {e: c for e, c in self.terms.items() if sum(e) <= bound}
        _accumulate(terms, other.terms, bound)
        return SymPoly._raw(self.num_vars, bound, terms)

    def __neg__(self):
        return SymPoly._raw(self.num_vars, self.max_degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymPoly(self.num_vars, self.max_degree, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        bound = min(self.max_degree, other.max_degree)
        out: dict = {}
        right = [(e2, sum(e2), c2) for e2, c2 in other.terms.items()]
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, d2, c2 in right:
                if d1 + d2 > bound:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SymPoly._raw(self.num_vars, bound, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def homogeneous_part(self, degree: int) -> SymPoly:
        return SymPoly(self.num_vars, self.max_degree, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def coefficient(self, exp) -> Fraction:
        exp = tuple(exp)
        if sum(exp) > self.max_degree:
            raise TruncationError("monomial beyond truncation degree")
        return self.terms.get(exp, Fraction(0))

    def is_symmetric(self) -> bool:
        """Every orbit under permuting variables is fully present with one coefficient."""
        orbits: dict[tuple, list] = {}
        for e, c in self.terms.items():
            orbits.setdefault(tuple(sorted(e, reverse=True)), []).append(c)
        for key, coeffs in orbits.items():
            if len(set(coeffs)) != 1 or len(coeffs) != _orbit_size(key):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __repr__(self):
        return f"SymPoly(N={self.num_vars}, deg<={self.max_degree}, {len(self.terms)} terms)"


def _exact(c):
    if isinstance(c, (int, Fraction)):
        return c
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not allowed")
    return Fraction(c)


def _accumulate(into: dict, terms: Mapping, bound: int) -> None:
    for e, c in terms.items():
        if sum(e) > bound:
            continue
        r = into.get(e, 0) + c
        if r:
            into[e] = r
        else:
            into.pop(e, None)


def _orbit_size(exp) -> int:
    n = math.factorial(len(exp))
    for m in Counter(exp).values():
        n //= math.factorial(m)
    return n


class BasisVector:
    """Coordinates of a symmetric function in the e, p or m basis."""

    __slots__ = ("basis_tag", "coords")

    def __init__(self, basis_tag: str, coords: Mapping | None = None):
        if basis_tag not in BASIS_TAGS:
            raise ValueError(f"unknown basis {basis_tag!r}")
        self.basis_tag = basis_tag
        self.coords = {Partition(k): Fraction(v) for k, v in (coords or {}).items() if v}

    def __getitem__(self, lam) -> Fraction:
        return self.coords.get(Partition(lam), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, BasisVector) or other.basis_tag != self.basis_tag:
            return NotImplemented
        c = dict(self.coords)
        for k, v in other.coords.items():
            c[k] = c.get(k, 0) + v
        return BasisVector(self.basis_tag, c)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BasisVector(self.basis_tag, {k: v * other for k, v in self.coords.items()})
        if not isinstance(other, BasisVector) or other.basis_tag != self.basis_tag:
            return NotImplemented
        if self.basis_tag == "m":
            raise TypeError("m-basis elements are not multiplicative")
        c: dict = {}
        for k1, v1 in self.coords.items():
            for k2, v2 in other.coords.items():
                k = k1.union(k2)
                c[k] = c.get(k, 0) + v1 * v2
        return BasisVector(self.basis_tag, c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BasisVector):
            return NotImplemented
        return self.basis_tag == other.basis_tag and self.coords == other.coords

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self.coords.items()))
        return f"BasisVector({self.basis_tag!r}, {{{body}}})"


def _elementary(k: int, N: int, bound: int) -> SymPoly:
    terms = {}
    for idx in combinations(range(N), k):
        exp = [0] * N
        for i in idx:
            exp[i] = 1
        terms[tuple(exp)] = 1
    return SymPoly(N, bound, terms)


def _power_sum(k: int, N: int, bound: int) -> SymPoly:
    return SymPoly(N, bound, {tuple(k if j == i else 0 for j in range(N)): 1 for i in range(N)})


def _monomial(lam: Partition, N: int, bound: int) -> SymPoly:
    if len(lam) > N:
        return SymPoly(N, bound)
    padded = tuple(lam) + (0,) * (N - len(lam))
    return SymPoly(N, bound, {e: 1 for e in set(permutations(padded))})


@lru_cache(maxsize=None)
def _expand(tag: str, lam: Partition, N: int) -> SymPoly:
    bound = lam.weight()
    if tag == "m":
        return _monomial(lam, N, bound)
    factor = _elementary if tag == "e" else _power_sum
    out = SymPoly.constant(N, bound)
    for part in lam:
        out = out * factor(part, N, bound)
    return out


def expand_basis_element(basis_tag: str, lam, N: int) -> SymPoly:
    """e_lambda, p_lambda or m_lambda as an explicit polynomial in N variables."""
    if basis_tag not in BASIS_TAGS:
        raise ValueError(f"unknown basis {basis_tag!r}")
    lam = Partition(lam)
    if N < lam.weight():
        raise ValueError(f"{N} variables cannot faithfully carry weight {lam.weight()}")
    return _expand(basis_tag, lam, N)


def _monomial_coords(f: SymPoly, degree: int) -> dict:
    """Coefficient of m_mu in a symmetric f, for every partition mu of ``degree``."""
    out = {}
    for mu in partitions(degree):
        if len(mu) > f.num_vars:
            continue
        c = f.terms.get(tuple(mu) + (0,) * (f.num_vars - len(mu)))
        if c:
            out[mu] = c
    return out


@lru_cache(maxsize=None)
def _transition_row(tag: str, lam: Partition, N: int) -> tuple:
    # m-coordinates of a basis element; cached because they depend only on (tag, lam, N)
    return tuple(sorted(_monomial_coords(_expand(tag, lam, N), lam.weight()).items()))


def _solve_degree(mcoords: dict, tag: str, N: int) -> dict:
    """Triangular back-substitution of m-coordinates into the e or p basis.

    e_lambda = m_{lambda'} + (terms lexicographically below lambda'), so the
    lex-largest remaining monomial fixes the next e-coordinate.  p_lambda is
    a combination of m_mu with mu a coarsening of lambda, so the lex-smallest
    remaining monomial fixes the next p-coordinate.
    """
    rem = {k: v for k, v in mcoords.items() if v}
    out = {}
    while rem:
        if tag == "e":
            mu = max(rem)
            lam = mu.conjugate()
        else:
            mu = min(rem)
            lam = mu
        row = dict(_transition_row(tag, lam, N))
        lead = row.get(mu)
        bad = [k for k in row if (k > mu if tag == "e" else k < mu)]
        if not lead or bad:
            raise ArithmeticError(f"transition matrix not triangular at {lam}")
        coef = Fraction(rem[mu]) / lead
        out[lam] = coef
        for k, v in row.items():
            r = rem.get(k, 0) - coef * v
            if r:
                rem[k] = r
            else:
                rem.pop(k, None)
    return out


def to_basis(f: SymPoly, basis_tag: str) -> BasisVector:
    """Exact coordinates of a symmetric polynomial in the requested basis."""
    if basis_tag not in BASIS_TAGS:
        raise ValueError(f"unknown basis {basis_tag!r}")
    if f.num_vars < f.max_degree:
        raise ValueError("too few variables: basis coordinates would be underdetermined")
    if not f.is_symmetric():
        raise NotSymmetricError("input polynomial is not symmetric")
    coords = {}
    for d in range(f.max_degree + 1):
        mc = _monomial_coords(f, d)
        if basis_tag == "m":
            coords.update(mc)
        else:
            coords.update(_solve_degree(mc, basis_tag, f.num_vars))
    return BasisVector(basis_tag, coords)


def doubilet_m_to_p(lam) -> BasisVector:
    """m_lambda in the power-sum basis by the set-partition formula.

    m_lambda = (-1)^{l}/prod m_i! * sum_pi (-1)^{l(pi)} prod_i (|pi_i|-1)! p_{lambda_{pi_i}}
    """
    lam = Partition(lam)
    one = BasisVector("p", {(): 1})

    def block(size, total):
        return BasisVector("p", {(total,): -math.factorial(size - 1)})

    s = set_partition_sum(lam, block, one)
    return s * Fraction((-1) ** len(lam), lam.multiplicity_factorial())


def oracle_b_coeff(Q: PowerSeries, lam, k: int, num_vars: int | None = None) -> Fraction:
    """Coefficient of e_lambda in e_k(Q(x_1)-1, ..., Q(x_N)-1), by brute force.

    Each Q(x_i) - 1 is written out as a polynomial in its own variable,
    e_k is summed over all k-subsets of variables, and the result is
    converted to the e-basis.
    """
    lam = Partition(lam)
    if k < 1:
        raise ValueError("k must be positive")
    n = lam.weight()
    if Q.order < n:
        raise TruncationError(f"series order {Q.order} is below weight {n}")
    N = n if num_vars is None else num_vars
    if N < n:
        raise ValueError("num_vars below weight")
    if N == 0 or k > N:
        return Fraction(0)
    shifted = [
        sum(
            (SymPoly.variable_power(N, n, i, j, Q[j]) for j in range(1, n + 1)),
            SymPoly(N, n),
        )
        for i in range(N)
    ]
    acc: dict = {}
    for subset in combinations(range(N), k):
        term = shifted[subset[0]]
        for i in subset[1:]:
            term = term * shifted[i]
        _accumulate(acc, term.terms, n)
    return to_basis(SymPoly._raw(N, n, acc), "e")[lam]


def product_identity_check(N: int, d: int) -> dict:
    """Compare prod_{i,j<=N}(1 + x_i y_j) with 1 + sum_{|lam|<=d} m_lam(y) e_lam(x).

    Both sides live in 2N variables (x first, then y) and are compared on
    every monomial of x-degree <= d.  Returns ``{"holds": bool, "mismatches": [...]}``.
    """
    V = 2 * N
    bound = 2 * d
    lhs = SymPoly.constant(V, bound)
    for i in range(N):
        for j in range(N):
            exp = [0] * V
            exp[i] = 1
            exp[N + j] = 1
            lhs = lhs * SymPoly(V, bound, {(0,) * V: 1, tuple(exp): 1})

    def embed(p: SymPoly, offset: int) -> SymPoly:
        terms = {}
        for e, c in p.terms.items():
            full = [0] * V
            full[offset : offset + N] = e
            terms[tuple(full)] = c
        return SymPoly(V, bound, terms)

    rhs = {(0,) * V: 1}
    for w in range(1, d + 1):
        for lam in partitions(w):
            ex = embed(_expand("e", lam, N), 0)
            my = embed(_monomial(lam, N, w), N)
            _accumulate(rhs, (ex * my).terms, bound)
    rhs = SymPoly._raw(V, bound, rhs)

    mismatches = []
    for e in sorted(set(lhs.terms) | set(rhs.terms)):
        if sum(e[:N]) > d:
            continue
        a, b = lhs.terms.get(e, Fraction(0)), rhs.terms.get(e, Fraction(0))
        if a != b:
            mismatches.append((e, a, b))
    return {"holds": not mismatches, "mismatches": mismatches}
