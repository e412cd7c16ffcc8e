import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from majorbound import spectrum as sp
from majorbound.bounds import (BranchViolation, PureState, delta, gap_bound, min_f_lower_bound,
                               mr_hat, renyi_gap, tightness_holds, vn_bound_closed, vn_m_bound)
from majorbound.entropy import Renyi, Tsallis, VonNeumann, evaluate
from majorbound.majorization import head_truncation, rho_m_eps
from majorbound.spectrum import Finite, Geometric

from conftest import ref_entropy, ref_eta, spectra

VN = VonNeumann()
T3 = Finite([0.5, 0.3, 0.2])
T4 = Finite([0.4, 0.3, 0.2, 0.1])

# reference values: S(.5,.3,.2) - ln 2, and S(T4) - S(.45,.4,.15), evaluated
# term by term with math.log (they agree with 40-digit arithmetic)
GAP_T3 = ref_entropy([0.5, 0.3, 0.2]) - math.log(2)
GAP_T4 = ref_entropy([0.4, 0.3, 0.2, 0.1]) - ref_entropy([0.45, 0.4, 0.15])
DELTA_T4 = 2 * ref_eta(0.3) - ref_eta(0.45) - ref_eta(0.15)


def test_reference_values():
    assert GAP_T3 == pytest.approx(0.33650583350462822, rel=1e-14)
    assert GAP_T4 == pytest.approx(0.26944147205312602, rel=1e-14)
    assert DELTA_T4 == pytest.approx(0.07848722156468218, rel=1e-14)


def test_gap_bound_examples():
    r = gap_bound(VN, T3, 1, 0.3)
    assert r.value == pytest.approx(GAP_T3, rel=1e-12)
    assert str(r.case) == "CaseF1"
    assert gap_bound(VN, T4, 1, 0.15).value == pytest.approx(GAP_T4, rel=1e-12)
    for f in (VN, Renyi(2), Tsallis(0.5)):
        assert gap_bound(f, T4, 1, 0.0).value == 0.0


def test_vn_bound_closed_examples():
    assert vn_bound_closed(T3, 1, 0.3) == pytest.approx(GAP_T3, rel=1e-12)
    assert vn_bound_closed(T4, 1, 0.15) == pytest.approx(GAP_T4, rel=1e-12)
    assert vn_bound_closed(T4, 3, 0.7) == 0.0
    assert vn_bound_closed(Finite([0.5, 0.5]), 1, 0.7) == 0.0


def test_delta_examples():
    assert delta(T4, 1, 0.15) == pytest.approx(DELTA_T4, rel=1e-12)
    expected = ref_eta(0.2) + ref_eta(0.1) - ref_eta(0.25) - ref_eta(0.05)
    assert delta(T4, 2, 0.05) == pytest.approx(expected, rel=1e-12)
    assert abs(delta(T4, 1, 1e-12)) < 1e-9
    with pytest.raises(BranchViolation):
        delta(T4, 1, 0.5)


def test_vn_m_bound():
    assert vn_m_bound(T3, 1) == pytest.approx(GAP_T3, rel=1e-12)
    assert vn_m_bound(Geometric(0.5), 3) == pytest.approx(0.125 * 2 * math.log(2), rel=1e-12)
    assert vn_m_bound(T3, 3) == 0.0


def test_renyi_gap():
    exact, loose = renyi_gap(T3, 1, 2.0)
    assert exact == pytest.approx(math.log(1 + 0.12 / 0.38), rel=1e-12)
    assert loose == pytest.approx(0.12 / 0.38, rel=1e-12)


@given(spectra(min_n=2), st.integers(1, 6), st.sampled_from([0.3, 0.5, 2.0, 3.0]))
def test_renyi_gap_matches_direct_difference(s, m, alpha):
    f = Renyi(alpha)
    direct = evaluate(f, s) - evaluate(f, head_truncation(s, m))
    exact, loose = renyi_gap(s, m, alpha)
    assert exact == pytest.approx(direct, abs=1e-10)
    assert -1e-12 <= exact <= loose + 1e-12


def test_renyi_gap_geometric():
    g = Geometric(0.6)
    f = Renyi(0.5)
    direct = evaluate(f, g) - evaluate(f, head_truncation(g, 2))
    assert renyi_gap(g, 2, 0.5)[0] == pytest.approx(direct, rel=1e-10)


@pytest.mark.parametrize("s, m, expected", [
    (Finite([0.6, 0.25, 0.15]), 1, True),
    (T4, 1, False),
    (Finite([0.2] * 5), 4, True),
])
def test_tightness_holds(s, m, expected):
    assert tightness_holds(s, m) is expected


def test_mr_hat_examples():
    u4 = Finite([0.25] * 4)
    assert mr_hat(u4, 0.6) == 2
    assert mr_hat(u4, 0.0) == 4
    assert mr_hat(Geometric(0.5), 0.0) == math.inf
    with pytest.raises(PureState):
        mr_hat(Finite([1.0]), 0.1)


def test_mr_hat_uniform_threshold():
    # 0.75 ln 3 = 0.82396 lies just above 0.59 ln 4 = 0.81792
    assert mr_hat(Finite([0.25] * 4), 0.59) == 3


def test_min_f_lower_bound():
    assert min_f_lower_bound(VN, T3, 1, 0.3) == pytest.approx(math.log(2), rel=1e-12)
    assert min_f_lower_bound(VN, T3, 1, 0.0) == pytest.approx(evaluate(VN, T3))
    assert min_f_lower_bound(Renyi(2), T3, 2, 0.5) == pytest.approx(evaluate(Renyi(2), T3))


@given(spectra(max_n=10), st.integers(0, 10), st.floats(0.0, 1.0))
def test_closed_form_equals_generic(s, m, eps):
    generic = gap_bound(VN, s, m, eps).value
    assert vn_bound_closed(s, m, eps) == pytest.approx(generic, abs=1e-10)


@given(spectra(max_n=8), st.integers(0, 6), st.floats(0.0, 1.0), st.floats(0.0, 1.0))
def test_monotone_in_eps(s, m, e1, e2):
    lo, hi = sorted((e1, e2))
    for f in (VN, Renyi(0.5), Renyi(2.0)):
        assert gap_bound(f, s, m, lo).value <= gap_bound(f, s, m, hi).value + sp.TOL


@given(spectra(max_n=8), st.integers(0, 6), st.floats(0.0, 1.0))
def test_monotone_in_m(s, m, eps):
    for f in (VN, Renyi(0.5), Tsallis(2.0)):
        assert gap_bound(f, s, m + 1, eps).value <= gap_bound(f, s, m, eps).value + sp.TOL


@given(spectra(min_n=2, max_n=8), st.integers(1, 6))
def test_eps_one_is_head_truncation(s, m):
    assume(m < s.support - 1)
    assert vn_bound_closed(s, m, 1.0) == pytest.approx(vn_m_bound(s, m), abs=1e-12)
    ext, _ = rho_m_eps(s, m, 1.0)
    np.testing.assert_allclose(ext.sorted().p, head_truncation(s, m).p, atol=1e-15)


def test_geometric_closed_form_matches_generic():
    g = Geometric(2 / 3)
    for m in (0, 1, 2, 5):
        for eps in (0.01, 0.1, 0.2, 0.5, 1.0):
            assert vn_bound_closed(g, m, eps) == pytest.approx(gap_bound(VN, g, m, eps).value, abs=1e-9)
