"""NumPy versions of the batch kernels in ``_ckernels.pyx``."""
from __future__ import annotations

from functools import lru_cache

import numpy as np


def sort_rows_desc(rows: np.ndarray) -> np.ndarray:
    return -np.sort(-rows, axis=1)


def prefix_violation(ref: np.ndarray, rows: np.ndarray, tol: float, kmax: int = -1) -> np.ndarray:
    n, w = rows.shape
    lim = w if kmax < 0 or kmax > w else kmax
    if n == 0 or lim == 0:
        return np.zeros(n, dtype=np.int64)
    r = np.zeros(lim)
    r[: min(lim, ref.size)] = ref[:lim]
    bad = np.cumsum(rows[:, :lim], axis=1) > np.cumsum(r) + tol
    first = np.argmax(bad, axis=1) + 1
    return np.where(bad.any(axis=1), first, 0).astype(np.int64)


def vn_entropy_rows(rows: np.ndarray) -> np.ndarray:
    safe = np.where(rows > 0, rows, 1.0)
    return -(np.where(rows > 0, rows, 0.0) * np.log(safe)).sum(axis=1)


def power_sum_rows(rows: np.ndarray, alpha: float) -> np.ndarray:
    return np.where(rows > 0, np.abs(rows) ** alpha, 0.0).sum(axis=1)


def l1_rows(rows: np.ndarray, base: np.ndarray) -> np.ndarray:
    return np.abs(rows - base[: rows.shape[1]]).sum(axis=1)


@lru_cache(maxsize=64)
def _lattice(dim: int, total: int) -> np.ndarray:
    if dim == 1:
        return np.array([[total]], dtype=np.int64)
    blocks = []
    for c in range(total, -1, -1):
        rest = _lattice(dim - 1, total - c)
        blocks.append(np.column_stack([np.full(len(rest), c, dtype=np.int64), rest]))
    return np.vstack(blocks)


def simplex_lattice(dim: int, total: int) -> np.ndarray:
    """All non-negative integer vectors of length `dim` summing to `total`, in decreasing lexicographic order."""
    return _lattice(dim, total).copy()
