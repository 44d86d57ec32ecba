
import pytest

from chernwork.applications import (
    brute_force_search,
    iter_realizable,
    parity_certificate,
    projective_fixture,
    rpp_obstruction_report,
    signature_mod4_check,
    theorem3_search,
    thm3_support,
    todd_genus,
)
from chernwork.combinatorics import Partition, partitions
from chernwork.errors import NotRealizableError
from chernwork.genus import ChernVector, evaluate_genus, signature_spec
from chernwork.hattori_stong import check_realizable

sig = signature_spec()
FIXTURES = [tuple(lam) for n in range(1, 5) for lam in partitions(n)]


def test_fixture_values():
    assert projective_fixture((1,)).entries == {Partition((1,)): 2}
    assert projective_fixture((2,)).entries == {Partition((2,)): 3, Partition((1, 1)): 9}
    assert projective_fixture((1, 1)).entries == {Partition((2,)): 4, Partition((1, 1)): 8}
    assert projective_fixture((4,))[(4,)] == 5


@pytest.mark.parametrize("f", FIXTURES, ids=str)
def test_fixtures_realizable(f):
    v = projective_fixture(f)
    assert check_realizable(v)
    assert todd_genus(v) == 1
    if v.complex_dimension % 2 == 0:
        s = evaluate_genus(sig, v)
        assert s.denominator == 1
        assert signature_mod4_check(v).holds


def test_mod4_examples():
    cp2 = signature_mod4_check(projective_fixture((2,)))
    assert (cp2.signature, cp2.top_chern, cp2.holds) == (1, 3, True)
    p11 = signature_mod4_check(projective_fixture((1, 1)))
    assert (p11.signature, p11.top_chern, p11.holds) == (0, 4, True)
    cp4 = signature_mod4_check(projective_fixture((4,)))
    assert (cp4.k, cp4.signature, cp4.top_chern, cp4.holds) == (2, 1, 5, True)


def test_mod4_preconditions():
    with pytest.raises(NotRealizableError):
        signature_mod4_check(ChernVector(2, {(2,): 1}))
    with pytest.raises(ValueError):
        signature_mod4_check(projective_fixture((3,)))


def test_parity_examples():
    cert = parity_certificate(ChernVector(6, {(6,): 7, (4, 2): -3}))
    assert cert.verdict == "even-certified"
    cert = parity_certificate(ChernVector(2, {(1, 1): 9}))
    assert cert.verdict == "not-applicable"
    assert cert.signature == 3
    cert = parity_certificate(ChernVector(2, {}))
    assert cert.verdict == "even-certified" and cert.signature == 0


@pytest.mark.parametrize("i", [1, 2])
def test_even_certified_implies_even(i):
    for v in iter_realizable(2, i, 12):
        cert = parity_certificate(v)
        if cert.verdict == "even-certified":
            s = evaluate_genus(sig, v)
            assert s.denominator == 1 and s.numerator % 2 == 0


@pytest.mark.parametrize("i", [1, 2, 3])
def test_search_matches_brute_force(i):
    bound = 30
    rep = theorem3_search(2, i, bound)
    brute = brute_force_search(2, i, bound)
    assert rep.realizable == len(brute["realizable"])
    assert rep.odd_signature_count == brute["odd"]
    fast = sorted((v[thm3_support(2, i)[0]], v[thm3_support(2, i)[1]]) for v in iter_realizable(2, i, bound))
    assert fast == sorted(brute["realizable"])


def test_i_is_canonicalized():
    assert thm3_support(2, 3) == thm3_support(2, 1) == (Partition((4,)), Partition((3, 1)))
    with pytest.raises(ValueError):
        thm3_support(2, 4)


def test_bound_zero():
    rep = theorem3_search(2, 2, 0)
    assert rep.candidates == 1 and rep.realizable == 1 and rep.all_signatures_even


def test_dim8_identities():
    for v in iter_realizable(2, 2, 300):
        c4, c22 = v[(4,)], v[(2, 2)]
        assert 45 * evaluate_genus(sig, v) == 14 * c4 + 3 * c22
        assert 720 * todd_genus(v) == -c4 + 3 * c22
        assert (c4 - c22) % 4 == 0


def test_lattice_basis_generates_survivors():
    rep = theorem3_search(2, 2, 200)
    (g1, _), (u, g2) = rep.lattice_basis
    for v in iter_realizable(2, 2, 200):
        x, y = v[(4,)], v[(2, 2)]
        assert y % g2 == 0
        assert (x - (y // g2) * u) % g1 == 0


def test_rpp():
    assert rpp_obstruction_report(8, bound=200).obstructed
    with pytest.raises(ValueError):
        rpp_obstruction_report(4)


def test_search_jobs_agree():
    assert theorem3_search(2, 1, 500, jobs=1) == theorem3_search(2, 1, 500, jobs=3)
