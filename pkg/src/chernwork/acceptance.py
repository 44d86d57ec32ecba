"""
Acceptance criteria as plain functions.

Each criterion returns ``(passed, detail)``.  ``pytest`` runs them one by one
(tests/test_acceptance.py) and ``chernwork selftest`` runs all of them.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction
from typing import Callable

from .applications import (
    FixtureSpec,
    projective_fixture,
    signature_mod4_check,
    theorem3_search,
)
from .combinatorics import binary_weight, nu2, partitions, partitions_up_to, stirling2
from .genus import ChernVector, genus_h_lambda, signature_spec, todd_spec
from .hattori_stong import b_coeff, b_coeff_general, check_realizable, integrality_functional
from .series import exp_series, polynomial_series
from .symfunc import doubilet_m_to_p, expand_basis_element, oracle_b_coeff, product_identity_check, to_basis


def _mismatch(items) -> tuple[bool, str]:
    items = list(items)
    if items:
        return False, f"{len(items)} mismatches, first: {items[0]}"
    return True, "exact agreement"


def criterion_01_closed_formula_vs_oracle():
    Q = exp_series(8)
    bad = []
    n = 0
    for lam in partitions_up_to(8):
        for k in range(1, 9):
            n += 1
            a, b = b_coeff(lam, k), oracle_b_coeff(Q, lam, k)
            if a != b:
                bad.append((lam, k, a, b))
    ok, detail = _mismatch(bad)
    return ok, f"{n} pairs (|lam|<=8, k<=8): {detail}"


GENERAL_QS = {
    "1+x": [1, 1],
    "(1+x)^2": [1, 2, 1],
    "1+x+x^3": [1, 1, 0, 1],
}


def criterion_02_general_q():
    bad = []
    n = 0
    for name, coeffs in GENERAL_QS.items():
        Q = polynomial_series(coeffs, 5)
        for lam in partitions_up_to(5):
            for k in range(1, 6):
                n += 1
                a, b = b_coeff_general(Q, lam, k), oracle_b_coeff(Q, lam, k)
                if a != b:
                    bad.append((name, lam, k, a, b))
    ok, detail = _mismatch(bad)
    return ok, f"{n} triples: {detail}"


def criterion_03_vanishing():
    bad = []
    for lam in partitions_up_to(10):
        w = lam.weight()
        for k in range(w + 1, w + 4):
            if k >= 1 and b_coeff(lam, k) != 0:
                bad.append(("k>|lam|", lam, k))
        if w >= 1:
            if len(lam) == 1 and b_coeff(lam, w) != 1:
                bad.append(("b_(k)^(k)", lam))
            if len(lam) >= 2 and b_coeff(lam, w) != 0:
                bad.append(("|lam|=k, l>=2", lam))
    return _mismatch(bad)


def criterion_04_single_part_law():
    bad = []
    for i in range(1, 11):
        for k in range(1, i + 1):
            expected = Fraction((-1) ** (i - k) * stirling2(i, k) * math.factorial(k - 1), math.factorial(i - 1))
            if b_coeff((i,), k) != expected:
                bad.append((i, k))
    return _mismatch(bad)


def criterion_05_doubilet():
    bad = []
    for lam in partitions_up_to(8):
        N = max(lam.weight(), 1)
        if doubilet_m_to_p(lam) != to_basis(expand_basis_element("m", lam, N), "p"):
            bad.append(lam)
    return _mismatch(bad)


def criterion_06_product_identity():
    bad = []
    for N in range(1, 5):
        for d in range(1, 5):
            r = product_identity_check(N, d)
            if not r["holds"]:
                bad.append((N, d, r["mismatches"][:1]))
    return _mismatch(bad)


def criterion_07_stirling():
    bad = []
    for n in range(21):
        for k in range(n + 2):
            rhs = sum(math.comb(n, l) * stirling2(l, k) for l in range(n + 1))
            if stirling2(n + 1, k + 1) != rhs:
                bad.append(("recurrence", n, k))
    e1 = exp_series(12) - 1
    for k in range(13):
        g = e1**k * Fraction(1, math.factorial(k))
        for n in range(k, 13):
            if g[n] * math.factorial(n) != stirling2(n, k):
                bad.append(("egf", n, k))
    return _mismatch(bad)


def criterion_08_signature_and_todd_coefficients():
    sig, td = signature_spec(), todd_spec()
    checks = {
        "sig (2)": (genus_h_lambda(sig, (2,)), Fraction(-2, 3)),
        "sig (1,1)": (genus_h_lambda(sig, (1, 1)), Fraction(1, 3)),
        "sig (4)": (genus_h_lambda(sig, (4,)), Fraction(14, 45)),
        "sig (2,2)": (genus_h_lambda(sig, (2, 2)), Fraction(3, 45)),
        "todd (4)": (genus_h_lambda(td, (4,)), Fraction(-1, 720)),
        "todd (2,2)": (genus_h_lambda(td, (2, 2)), Fraction(3, 720)),
    }
    bad = [(name, got, want) for name, (got, want) in checks.items() if got != want]
    # dimension 4: sigma = (c1^2 - 2 c2)/3 on an independent pair of vectors
    for c11, c2 in [(1, 0), (0, 1), (9, 3), (8, 4)]:
        v = ChernVector(2, {(1, 1): c11, (2,): c2})
        got = genus_h_lambda(sig, (1, 1)) * v[(1, 1)] + genus_h_lambda(sig, (2,)) * v[(2,)]
        if got != Fraction(c11 - 2 * c2, 3):
            bad.append(("sigma dim 4", c11, c2))
    return _mismatch(bad)


def criterion_09_two_adic():
    sig = signature_spec()
    bad = []
    for i in range(1, 13):
        h = genus_h_lambda(sig, (2 * i,))
        if nu2(h) != binary_weight(i):
            bad.append(("nu2(h_2i)", i, nu2(h)))
    for w in range(2, 13, 2):
        for lam in partitions(w):
            if lam.has_distinct_parts() and nu2(genus_h_lambda(sig, lam)) < 1:
                bad.append(("distinct parts", lam))
    for i in range(1, 13):
        if sig.h_scalar(2 * i - 1) != 0:
            bad.append(("h_odd", 2 * i - 1))
    return _mismatch(bad)


FIXTURES_10 = [(1,), (2,), (1, 1), (3,), (2, 1), (4,)]


def criterion_10_realizability():
    bad = []
    for f in FIXTURES_10:
        if not check_realizable(projective_fixture(f)):
            bad.append(("fixture", str(FixtureSpec(f))))
    r1 = check_realizable(ChernVector(1, {(1,): 1}))
    if r1 or [v for _, v in r1.violations] != [Fraction(1, 2)]:
        bad.append(("{(1):1}", r1.violations))
    r2 = check_realizable(ChernVector(2, {(1, 1): 0, (2,): 1}))
    if r2 or [v for _, v in r2.violations] != [Fraction(1, 12)]:
        bad.append(("{(1,1):0,(2):1}", r2.violations))
    return _mismatch(bad)


def _fixtures_of_dimension(n: int):
    for lam in partitions(n):
        yield tuple(lam)


def criterion_11_mod4():
    bad = []
    count = 0
    for n in (2, 4):
        for f in _fixtures_of_dimension(n):
            count += 1
            rep = signature_mod4_check(projective_fixture(f))
            if not rep.holds:
                bad.append((f, rep))
    ok, detail = _mismatch(bad)
    return ok, f"{count} fixtures: {detail}"


def criterion_12_theorem3_k2():
    t0 = time.perf_counter()
    a = theorem3_search(2, 2, 10000)
    b = theorem3_search(2, 1, 1000)
    elapsed = time.perf_counter() - t0
    ok = (
        a.all_signatures_even
        and a.square_congruence_holds
        and a.realizable > 0
        and b.all_signatures_even
        and b.realizable > 0
        and elapsed <= 300
    )
    return ok, (
        f"i=2: {a.realizable} realizable of {a.candidates}, even={a.all_signatures_even}, "
        f"c4=c2^2 mod 4: {a.square_congruence_holds}; i=1: {b.realizable} realizable, "
        f"even={b.all_signatures_even}; {elapsed:.2f}s"
    )


def criterion_13_gamma_functional():
    k = 3
    f = integrality_functional((1, 1), 2 * k)
    got = f[(k, k)]
    want = Fraction(1, math.factorial(k - 1) ** 2)
    top = f[(2 * k,)]
    return got == want and top == 0, f"coefficient of c_3^2 = {got} (want {want}); of c_6 = {top}"


def criterion_14_determinism():
    from .cli import run

    argv = ["search-thm3", "--k", "2", "--i", "2", "--bound", "10000"]
    s1, out1 = run(argv + ["--jobs", "1"])
    s8, out8 = run(argv + ["--jobs", "8"])
    ok = s1 == s8 == 0 and out1 == out8
    return ok, f"exit {s1}/{s8}, {len(out1)} bytes, identical={out1 == out8}"


CRITERIA: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    (name, fn) for name, fn in sorted(globals().items()) if name.startswith("criterion_")
]


def run_all(report: Callable[[str], None] = print) -> bool:
    all_ok = True
    for name, fn in CRITERIA:
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash counts as a failure
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        report(f"{'PASS' if ok else 'FAIL'} {name} ({time.perf_counter() - t0:.1f}s): {detail}")
        all_ok = all_ok and ok
    return all_ok
