# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled prime-field elimination kernels.

Mirrors the API of ``rankmetric._gfkern_py`` (the numpy fallback): RREF,
rank and batched rank over GF(p) on int64 arrays with entries in 0..p-1.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


cdef inline i64 _inv_scalar(i64 x, i64 p) noexcept:
    # Fermat: x^(p-2) mod p; p is prime and x != 0.
    cdef i64 acc = 1
    cdef i64 base = x % p
    cdef i64 e = p - 2
    while e > 0:
        if e & 1:
            acc = (acc * base) % p
        base = (base * base) % p
        e >>= 1
    return acc


cdef int _rref_inplace(i64[:, ::1] a, i64 p, i64* piv_cols) noexcept:
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t r = 0, col, i, j
    cdef i64 v, inv, f
    for col in range(n):
        if r == m:
            break
        i = -1
        for j in range(r, m):
            if a[j, col] != 0:
                i = j
                break
        if i < 0:
            continue
        if i != r:
            for j in range(n):
                v = a[r, j]
                a[r, j] = a[i, j]
                a[i, j] = v
        inv = _inv_scalar(a[r, col], p)
        if inv != 1:
            for j in range(col, n):
                a[r, j] = (a[r, j] * inv) % p
        for i in range(m):
            if i == r:
                continue
            f = a[i, col]
            if f != 0:
                for j in range(col, n):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
                    if a[i, j] < 0:
                        a[i, j] += p
        piv_cols[r] = col
        r += 1
    return <int> r


def rref_modp(a, p):
    """Reduced row echelon form over GF(p): returns (R, pivots)."""
    cdef cnp.ndarray[i64, ndim=2] arr = np.array(a, dtype=np.int64) % p
    cdef Py_ssize_t m = arr.shape[0]
    cdef cnp.ndarray[i64, ndim=1] piv = np.empty(m if m > 0 else 1, dtype=np.int64)
    cdef int rank = 0
    if m > 0 and arr.shape[1] > 0:
        rank = _rref_inplace(arr, p, <i64*> piv.data)
    return arr, tuple(int(piv[i]) for i in range(rank))


def rank_modp(a, p):
    """Rank over GF(p)."""
    cdef cnp.ndarray[i64, ndim=2] arr = np.array(a, dtype=np.int64) % p
    cdef cnp.ndarray[i64, ndim=1] piv = np.empty(arr.shape[0] if arr.shape[0] > 0 else 1, dtype=np.int64)
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        return 0
    return int(_rref_inplace(arr, p, <i64*> piv.data))


cdef int _rank_only(i64[:, ::1] a, i64 p) noexcept:
    # Forward elimination without back-substitution or scaling bookkeeping.
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t r = 0, col, i, j
    cdef i64 v, inv, f
    for col in range(n):
        if r == m:
            break
        i = -1
        for j in range(r, m):
            if a[j, col] != 0:
                i = j
                break
        if i < 0:
            continue
        if i != r:
            for j in range(col, n):
                v = a[r, j]
                a[r, j] = a[i, j]
                a[i, j] = v
        inv = _inv_scalar(a[r, col], p)
        for i in range(r + 1, m):
            f = a[i, col]
            if f != 0:
                f = (f * inv) % p
                for j in range(col, n):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
                    if a[i, j] < 0:
                        a[i, j] += p
        r += 1
    return <int> r


def batch_rank_modp(mats, p):
    """Ranks over GF(p) of a batch of matrices, shape (N, r, c) -> (N,)."""
    cdef cnp.ndarray[i64, ndim=3] arr = np.array(mats, dtype=np.int64) % p
    if arr.ndim != 3:
        raise ValueError("expected a batch of matrices, shape (N, r, c)")
    cdef Py_ssize_t n = arr.shape[0]
    cdef cnp.ndarray[i64, ndim=1] out = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t t
    cdef i64 pp = p
    for t in range(n):
        out[t] = _rank_only(arr[t], pp)
    return out


def inv_modp(a, p):
    """Inverse of a square matrix over GF(p), or None if singular."""
    arr = np.asarray(a, dtype=np.int64)
    n = arr.shape[0]
    if arr.shape != (n, n):
        raise ValueError("matrix must be square")
    aug = np.concatenate([arr % p, np.eye(n, dtype=np.int64)], axis=1)
    red, pivots = rref_modp(aug, p)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        return None
    return red[:, n:]
