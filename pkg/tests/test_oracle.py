import json

import numpy as np
import pytest

from majorbound.bounds import gap_bound, vn_m_bound
from majorbound.entropy import Renyi, VonNeumann
from majorbound.majorization import majorizes, rho_m_eps
from majorbound.oracle import (SearchBudget, TooLarge, candidates, in_pset, in_tset,
                               sample_constrained, verify_dominance, verify_sigma_star,
                               worst_gap)
from majorbound.spectrum import Finite, Geometric, MajorboundError

VN = VonNeumann()
T4 = Finite([0.4, 0.3, 0.2, 0.1])


def test_budget_validation():
    with pytest.raises(MajorboundError):
        SearchBudget(mode="anneal")
    with pytest.raises(MajorboundError):
        SearchBudget(resolution=1000)
    with pytest.raises(MajorboundError):
        SearchBudget(seed=-1)


def test_membership_predicates():
    assert in_tset([0.4, 0.45, 0.15, 0.0], T4, 1, 0.15)
    assert not in_tset([0.4, 0.45, 0.15, 0.0], T4, 1, 0.1)
    assert not in_tset([0.45, 0.3, 0.15, 0.1], T4, 1, 0.2)
    assert not in_tset([0.4, 0.25, 0.25, 0.1], T4, 1, 0.2)
    # pset is permutation invariant and only needs the first m prefix sums
    assert in_pset([0.1, 0.25, 0.25, 0.4], T4, 1, 0.1)
    assert not in_pset([0.5, 0.2, 0.2, 0.1], T4, 1, 0.2)


def test_tightness_case_attained():
    s = Finite([0.6, 0.25, 0.15])
    rep = worst_gap(VN, s, 1, 1.0, SearchBudget(resolution=100))
    assert rep.passed
    assert rep.worst_gap == pytest.approx(vn_m_bound(s, 1), abs=1e-12)
    np.testing.assert_allclose(np.sort(rep.witness.coeffs)[::-1][:2], [0.6, 0.4], atol=1e-12)


def test_zero_eps_has_zero_gap():
    for which in ("tset", "pset"):
        rep = worst_gap(VN, T4, 1, 0.0, SearchBudget(resolution=20), which)
        assert rep.passed and rep.worst_gap == pytest.approx(0.0, abs=1e-12)


def test_worst_gap_below_bound_at_resolution_200():
    budget = SearchBudget(resolution=200)
    for which in ("tset", "pset"):
        rep = worst_gap(VN, T4, 1, 0.15, budget, which)
        assert rep.passed
        assert rep.worst_gap <= gap_bound(VN, T4, 1, 0.15).value + 1e-8


def test_dominance_example():
    rep = verify_dominance(Finite([0.5, 0.3, 0.2]), 1, 0.2, SearchBudget(resolution=100))
    assert rep.passed, rep.to_json()


def test_dominance_flags_a_wrong_extremal(monkeypatch):
    import majorbound.oracle as oracle

    def bad(s, m, eps, tol=None):
        ext, case = rho_m_eps(s, m, 0.0)
        return ext, case

    monkeypatch.setattr(oracle, "rho_m_eps", bad)
    rep = oracle.verify_dominance(T4, 1, 0.2, SearchBudget(resolution=30))
    assert not rep.passed
    failed = [c for c in rep.checks if not c.passed]
    assert failed and failed[0].counterexample["prefix_index"] >= 1


def test_soundness_flags_a_wrong_bound(monkeypatch):
    import majorbound.oracle as oracle
    from majorbound.bounds import BoundResult

    def low(f, s, m, eps, tol=None):
        r = gap_bound(f, s, m, eps, tol)
        return BoundResult(r.value / 2, r.case, r.extremal)

    monkeypatch.setattr(oracle, "gap_bound", low)
    rep = oracle.worst_gap(VN, T4, 1, 0.3, SearchBudget(resolution=50))
    assert not rep.passed
    assert "soundness" in rep.summary()


def test_candidates_pass_membership():
    budget = SearchBudget(mode="random", samples=500, seed=7)
    for which, member in (("tset", in_tset), ("pset", in_pset)):
        for st_ in sample_constrained(T4, 1, 0.2, budget, which):
            assert member(st_.coeffs, T4, 1, 0.2)


def test_determinism():
    budget = SearchBudget(mode="refine", samples=300, seed=123, resolution=40)
    a = worst_gap(Renyi(2.0), T4, 1, 0.2, budget, "pset")
    b = worst_gap(Renyi(2.0), T4, 1, 0.2, budget, "pset")
    assert a.to_json() == b.to_json()
    assert json.loads(a.to_json())["passed"] is True


def test_geometric_base():
    g = Geometric(0.5)
    budget = SearchBudget(resolution=60)
    rep = worst_gap(VN, g, 1, 0.3, budget)
    assert rep.passed
    assert verify_dominance(g, 1, 0.3, budget).passed


def test_too_large():
    with pytest.raises(TooLarge):
        candidates(Finite(np.full(20, 0.05)), 1, 0.2, SearchBudget(), "tset")


def test_sigma_star_small():
    rep = verify_sigma_star(SearchBudget(samples=500, seed=3))
    assert rep.passed, rep.to_json()
    assert rep.candidates_tested == 500


def test_report_serialization():
    rep = verify_dominance(T4, 1, 0.15, SearchBudget(resolution=20))
    d = json.loads(rep.to_json())
    assert d["kind"] == "dominance"
    assert rep.summary().startswith("PASS dominance")
