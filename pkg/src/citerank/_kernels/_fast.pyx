# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: journal-pair counting and sparse matvec.

Contracts match `_pure`; `citerank._kernels` picks whichever is available.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

# Same dense/sort crossover as the pure backend.
DEF DENSE_CELLS = 4194304


def count_pairs(src, dst, mult, long long n, bint drop_diagonal):
    """Sum multiplicities per (src, dst) journal pair; sorted (src, dst) out."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] s = np.ascontiguousarray(src, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] d = np.ascontiguousarray(dst, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] m = np.ascontiguousarray(mult, dtype=np.int64)
    cdef Py_ssize_t size = s.shape[0]
    if size == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty.copy(), empty.copy()
    if n * n <= DENSE_CELLS:
        return _count_dense(s, d, m, n, drop_diagonal)
    return _count_sorted(s, d, m, n, drop_diagonal)


cdef _count_dense(cnp.int64_t[::1] src, cnp.int64_t[::1] dst,
                  cnp.int64_t[::1] mult, long long n, bint drop_diagonal):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] acc = np.zeros(n * n, dtype=np.int64)
    cdef cnp.int64_t[::1] a = acc
    cdef Py_ssize_t p, size = src.shape[0]
    cdef long long s, d, nonzero = 0
    for p in range(size):
        s = src[p]
        d = dst[p]
        if drop_diagonal and s == d:
            continue
        a[s * n + d] += mult[p]
    cdef Py_ssize_t cell
    for cell in range(n * n):
        if a[cell] != 0:
            nonzero += 1
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_s = np.empty(nonzero, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_d = np.empty(nonzero, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_w = np.empty(nonzero, dtype=np.int64)
    cdef cnp.int64_t[::1] os = out_s, od = out_d, ow = out_w
    cdef Py_ssize_t k = 0
    for cell in range(n * n):
        if a[cell] != 0:
            os[k] = cell // n
            od[k] = cell % n
            ow[k] = a[cell]
            k += 1
    return out_s, out_d, out_w


cdef _count_sorted(cnp.ndarray[cnp.int64_t, ndim=1] src,
                   cnp.ndarray[cnp.int64_t, ndim=1] dst,
                   cnp.ndarray[cnp.int64_t, ndim=1] mult,
                   long long n, bint drop_diagonal):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] key = src * n + dst
    if drop_diagonal:
        keep = src != dst
        key = key[keep]
        mult = np.ascontiguousarray(mult[keep])
    if key.shape[0] == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty.copy(), empty.copy()
    order = np.argsort(key, kind="stable")
    cdef cnp.ndarray[cnp.int64_t, ndim=1] skey = np.ascontiguousarray(key[order])
    cdef cnp.ndarray[cnp.int64_t, ndim=1] smult = np.ascontiguousarray(mult[order])
    cdef Py_ssize_t size = skey.shape[0], p
    cdef Py_ssize_t uniq = 1
    for p in range(1, size):
        if skey[p] != skey[p - 1]:
            uniq += 1
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_s = np.empty(uniq, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_d = np.empty(uniq, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_w = np.empty(uniq, dtype=np.int64)
    cdef Py_ssize_t k = 0
    cdef long long run = smult[0], cur = skey[0]
    for p in range(1, size):
        if skey[p] == cur:
            run += smult[p]
        else:
            out_s[k] = cur // n
            out_d[k] = cur % n
            out_w[k] = run
            k += 1
            cur = skey[p]
            run = smult[p]
    out_s[k] = cur // n
    out_d[k] = cur % n
    out_w[k] = run
    return out_s, out_d, out_w


def matvec(Py_ssize_t n, rows, cols, vals, v):
    """y = M v for M in coordinate form."""
    cdef cnp.int64_t[::1] r = np.ascontiguousarray(rows, dtype=np.int64)
    cdef cnp.int64_t[::1] c = np.ascontiguousarray(cols, dtype=np.int64)
    cdef cnp.float64_t[::1] a = np.ascontiguousarray(vals, dtype=np.float64)
    cdef cnp.float64_t[::1] x = np.ascontiguousarray(v, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.zeros(n, dtype=np.float64)
    cdef cnp.float64_t[::1] y = out
    cdef Py_ssize_t p, nnz = r.shape[0]
    for p in range(nnz):
        y[r[p]] += a[p] * x[c[p]]
    return out
