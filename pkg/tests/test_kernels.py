import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from majorbound import _pykernels, kernels

try:
    from majorbound import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")

rows = arrays(np.float64, st.tuples(st.integers(1, 30), st.integers(1, 9)),
              elements=st.floats(0, 1))


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("impl", [_pykernels, pytest.param(_ckernels, marks=needs_c)])
def test_simplex_lattice(impl):
    lat = impl.simplex_lattice(3, 2)
    expected = [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]]
    np.testing.assert_array_equal(lat, expected)
    assert impl.simplex_lattice(1, 5).tolist() == [[5]]
    assert len(impl.simplex_lattice(4, 10)) == 286


@pytest.mark.parametrize("impl", [_pykernels, pytest.param(_ckernels, marks=needs_c)])
def test_prefix_violation(impl):
    ref = np.array([0.5, 0.3, 0.2])
    r = np.array([[0.5, 0.3, 0.2], [0.4, 0.5, 0.1], [0.6, 0.2, 0.2]])
    assert impl.prefix_violation(ref, r, 1e-9).tolist() == [0, 2, 1]
    assert impl.prefix_violation(ref, r, 1e-9, 1).tolist() == [0, 0, 1]


@needs_c
@given(rows)
def test_backends_agree(x):
    x = np.ascontiguousarray(x)
    base = np.ascontiguousarray(x[0])
    np.testing.assert_array_equal(_ckernels.sort_rows_desc(x), _pykernels.sort_rows_desc(x))
    np.testing.assert_allclose(_ckernels.vn_entropy_rows(x), _pykernels.vn_entropy_rows(x), rtol=1e-12, atol=1e-15)
    np.testing.assert_allclose(_ckernels.power_sum_rows(x, 0.5), _pykernels.power_sum_rows(x, 0.5), rtol=1e-12)
    np.testing.assert_allclose(_ckernels.l1_rows(x, base), _pykernels.l1_rows(x, base), rtol=1e-12, atol=1e-15)
    ref = np.ascontiguousarray(np.sort(base)[::-1])
    s = _pykernels.sort_rows_desc(x)
    np.testing.assert_array_equal(_ckernels.prefix_violation(ref, s, 1e-9), _pykernels.prefix_violation(ref, s, 1e-9))


@needs_c
@given(st.integers(1, 5), st.integers(0, 8))
def test_lattice_agrees(dim, total):
    np.testing.assert_array_equal(_ckernels.simplex_lattice(dim, total), _pykernels.simplex_lattice(dim, total))
