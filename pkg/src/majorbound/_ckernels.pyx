# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels for the verification oracle.

Every function takes a 2-D C-contiguous float64 array holding one candidate
state per row and must agree with the NumPy versions in ``_pykernels``.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport log, pow, sqrt

cnp.import_array()


def sort_rows_desc(double[:, ::1] rows):
    """Copy of `rows` with each row sorted non-increasingly (insertion sort)."""
    cdef Py_ssize_t r, i, j, n = rows.shape[0], w = rows.shape[1]
    cdef double x
    out_arr = np.array(rows, dtype=np.float64, copy=True, order="C")
    cdef double[:, ::1] out = out_arr
    for r in range(n):
        for i in range(1, w):
            x = out[r, i]
            j = i - 1
            while j >= 0 and out[r, j] < x:
                out[r, j + 1] = out[r, j]
                j -= 1
            out[r, j + 1] = x
    return out_arr


def prefix_violation(double[::1] ref, double[:, ::1] rows, double tol, Py_ssize_t kmax=-1):
    """First k (1-based) with ``sum(rows[r, :k]) > sum(ref[:k]) + tol``, 0 if none.

    Only ``k <= kmax`` is inspected when `kmax` is non-negative. `ref` must be
    at least as wide as `rows`; missing entries count as zero.
    """
    cdef Py_ssize_t r, k, n = rows.shape[0], w = rows.shape[1]
    cdef Py_ssize_t lim = w if kmax < 0 or kmax > w else kmax
    cdef double a, b
    out_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    for r in range(n):
        a = 0.0
        b = 0.0
        for k in range(lim):
            a += rows[r, k]
            if k < ref.shape[0]:
                b += ref[k]
            if a > b + tol:
                out[r] = k + 1
                break
    return out_arr


def vn_entropy_rows(double[:, ::1] rows):
    cdef Py_ssize_t r, k, n = rows.shape[0], w = rows.shape[1]
    cdef double acc, x
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    for r in range(n):
        acc = 0.0
        for k in range(w):
            x = rows[r, k]
            if x > 0:
                acc -= x * log(x)
        out[r] = acc
    return out_arr


def power_sum_rows(double[:, ::1] rows, double alpha):
    cdef Py_ssize_t r, k, n = rows.shape[0], w = rows.shape[1]
    cdef double acc, x
    # the common exponents avoid the generic pow, as NumPy does
    cdef int mode = 1 if alpha == 0.5 else (2 if alpha == 2.0 else 0)
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    for r in range(n):
        acc = 0.0
        for k in range(w):
            x = rows[r, k]
            if x > 0:
                if mode == 1:
                    acc += sqrt(x)
                elif mode == 2:
                    acc += x * x
                else:
                    acc += pow(x, alpha)
        out[r] = acc
    return out_arr


def l1_rows(double[:, ::1] rows, double[::1] base):
    cdef Py_ssize_t r, k, n = rows.shape[0], w = rows.shape[1]
    cdef double acc, d
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    for r in range(n):
        acc = 0.0
        for k in range(w):
            d = rows[r, k] - base[k]
            acc += d if d >= 0 else -d
        out[r] = acc
    return out_arr


def simplex_lattice(Py_ssize_t dim, Py_ssize_t total):
    """All non-negative integer vectors of length `dim` summing to `total`, in decreasing lexicographic order."""
    from math import comb
    cdef Py_ssize_t count = comb(total + dim - 1, dim - 1)
    out_arr = np.zeros((count, dim), dtype=np.int64)
    if dim == 1:
        out_arr[0, 0] = total
        return out_arr
    cdef cnp.int64_t[:, ::1] out = out_arr
    cdef cnp.int64_t[::1] cur = np.zeros(dim, dtype=np.int64)
    cdef Py_ssize_t row = 0, i, j, rest
    cur[0] = total
    while True:
        for i in range(dim):
            out[row, i] = cur[i]
        row += 1
        # next composition in reverse-lexicographic order of cur[0..dim-2]
        j = dim - 2
        while j >= 0 and cur[j] == 0:
            j -= 1
        if j < 0:
            break
        cur[j] -= 1
        rest = cur[dim - 1] + 1
        cur[dim - 1] = 0
        cur[j + 1] += rest
    return out_arr
