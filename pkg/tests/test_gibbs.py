import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from majorbound.bounds import gap_bound, mr_hat, vn_bound_closed
from majorbound.entropy import VonNeumann, evaluate
from majorbound.gibbs import (DEFAULT_GRIDS, FIG_MS, OutOfRange, Grid, figure_csv, figure_data,
                              gibbs_entropy, gibbs_mr_hat, gibbs_spectrum, gibbs_vn_bound)
from majorbound.spectrum import Geometric

S2 = 3 * math.log(3) - 2 * math.log(2)


@pytest.mark.parametrize("N, q", [(1, 0.5), (2, 2 / 3), (100, 100 / 101)])
def test_gibbs_spectrum(N, q):
    assert gibbs_spectrum(N) == Geometric(q)


@pytest.mark.parametrize("N", [0.1, 1, 2, 10, 100])
def test_gibbs_entropy_matches_geometric(N):
    assert gibbs_entropy(N) == pytest.approx(evaluate(VonNeumann(), gibbs_spectrum(N)), rel=1e-12)


def test_gibbs_vn_bound_examples():
    assert gibbs_vn_bound(2, 2, 0.5) == pytest.approx(4 / 9 * S2, rel=1e-12)
    assert gibbs_vn_bound(1, 0, 1.0) == pytest.approx(2 * math.log(2), rel=1e-12)
    q = 2 / 3
    for m in (0, 1, 3):
        assert gibbs_vn_bound(2, m, q ** (m + 1)) == pytest.approx(q**m * S2, rel=1e-12)


# reference values from the state rho_{m,eps} built on 400 terms with 40-digit arithmetic
@pytest.mark.parametrize("m, eps, expected", [
    (1, 0.1, 0.37837426583993944),
    (0, 0.05, 0.23589279581775648),
    (3, 0.01, 0.05089169482233113),
    (2, 0.2, 0.61639374434898517),
])
def test_gibbs_vn_bound_wavy_branch(m, eps, expected):
    assert gibbs_vn_bound(2, m, eps) == pytest.approx(expected, rel=1e-12)


@given(st.sampled_from([0.5, 1.0, 2.0, 10.0, 100.0]), st.integers(0, 25), st.floats(1e-4, 1.0))
def test_gibbs_vn_bound_matches_generic(N, m, eps):
    assert gibbs_vn_bound(N, m, eps) == pytest.approx(vn_bound_closed(gibbs_spectrum(N), m, eps), abs=1e-9)


@pytest.mark.parametrize("N, eps, expected", [
    (1, 0.1, 5),
    (100, 0.1, 233),
    # exact power: q^2 = eps, so the minimum is m = 2 and the estimate is 3
    (1, 0.25, 3),
    (1, 0.5, 2),
])
def test_gibbs_mr_hat(N, eps, expected):
    assert gibbs_mr_hat(N, eps) == expected
    assert mr_hat(gibbs_spectrum(N), eps) == expected


def test_out_of_range():
    with pytest.raises(OutOfRange):
        gibbs_spectrum(0)
    with pytest.raises(OutOfRange):
        gibbs_vn_bound(1, 0, 0.0)
    with pytest.raises(OutOfRange):
        gibbs_mr_hat(1, 1.0)


def test_fig1_saturates_at_full_entropy():
    header, rows = figure_data("fig1")
    assert header == ["eps"] + [f"m{m}" for m in FIG_MS]
    sat = rows[rows[:, 0] >= 2 / 3]
    np.testing.assert_allclose(sat[:, 1], S2, rtol=1e-12)


def test_fig_columns_monotone():
    for which in ("fig1", "fig2"):
        _, rows = figure_data(which)
        vals = rows[:, 1:]
        assert np.all(np.diff(vals, axis=0) >= -1e-12)
        assert np.all(np.diff(vals, axis=1) <= 1e-12)


def test_fig3_staircase():
    header, rows = figure_data("fig3")
    assert header == ["eps", "N1", "N10", "N100"]
    assert np.all(np.diff(rows[:, 1:], axis=0) <= 0)
    assert np.all(np.diff(rows[:, 1:], axis=1) >= 0)


def test_figure_csv_is_stable():
    a = figure_csv("fig2", Grid(0.01, 1.0, 7))
    b = figure_csv("fig2", Grid(0.01, 1.0, 7))
    assert a == b
    lines = a.splitlines()
    assert lines[0] == "eps,m0,m1,m2,m3,m10,m20"
    assert len(lines) == 8
    assert "e" not in lines[-1].split(",")[0]


def test_grid_validation():
    with pytest.raises(Exception):
        Grid(0.0, 1.0, 10).values()
    assert DEFAULT_GRIDS["fig3"].log
