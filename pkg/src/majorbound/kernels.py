"""Batch kernels used by the oracle, compiled when available.

The Cython build (``_ckernels``) is preferred. Set ``MAJORBOUND_PURE_PYTHON=1``
to force the NumPy fallback; :data:`BACKEND` names the active one.
"""
from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("MAJORBOUND_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

sort_rows_desc = _impl.sort_rows_desc
prefix_violation = _impl.prefix_violation
vn_entropy_rows = _impl.vn_entropy_rows
power_sum_rows = _impl.power_sum_rows
l1_rows = _impl.l1_rows
simplex_lattice = _impl.simplex_lattice
