"""Numpy fallback for the prime-field elimination kernels.

Same API as the compiled extension ``rankmetric._gfkern``: dense row
reduction and batched rank over GF(p) for prime p, on int64 arrays with
entries in 0..p-1.  Row operations are vectorized per pivot step, so the
fallback stays usable on the large batches the enumeration scans produce.
"""

from __future__ import annotations

import numpy as np

_INV_TABLES: dict[int, np.ndarray] = {}


def _inv_table(p: int) -> np.ndarray:
    """Table of multiplicative inverses mod p (index 0 unused)."""
    tab = _INV_TABLES.get(p)
    if tab is None:
        tab = np.zeros(p, dtype=np.int64)
        for x in range(1, p):
            tab[x] = pow(x, p - 2, p)
        _INV_TABLES[p] = tab
    return tab


def rref_modp(a, p):
    """Reduced row echelon form of ``a`` over GF(p).

    Returns (R, pivots) with R a fresh int64 array of the same shape and
    pivots a tuple of pivot column indices; rank = len(pivots).
    """
    a = np.array(a, dtype=np.int64) % p
    m, n = a.shape
    inv = _inv_table(p)
    pivots = []
    r = 0
    for col in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, col])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * inv[a[r, col]]) % p
        f = a[:, col].copy()
        f[r] = 0
        a = (a - np.outer(f, a[r])) % p
        pivots.append(col)
        r += 1
    return a, tuple(pivots)


def rank_modp(a, p):
    """Rank of ``a`` over GF(p)."""
    return len(rref_modp(a, p)[1])


def batch_rank_modp(mats, p):
    """Ranks over GF(p) of a batch of matrices, shape (N, r, c) -> (N,)."""
    a = np.array(mats, dtype=np.int64) % p
    if a.ndim != 3:
        raise ValueError("expected a batch of matrices, shape (N, r, c)")
    n, r, c = a.shape
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    inv = _inv_table(p)
    piv = np.zeros(n, dtype=np.int64)
    rows = np.arange(r)
    for col in range(c):
        colv = a[:, :, col]
        elig = (rows[None, :] >= piv[:, None]) & (colv != 0)
        has = elig.any(axis=1)
        if not has.any():
            continue
        sel = np.nonzero(has)[0]
        pr = piv[sel]
        fr = elig[sel].argmax(axis=1)
        tmp = a[sel, pr].copy()
        a[sel, pr] = a[sel, fr]
        a[sel, fr] = tmp
        prow = (a[sel, pr] * inv[a[sel, pr, col]][:, None]) % p
        a[sel, pr] = prow
        block = a[sel]
        factors = np.where(rows[None, :] > pr[:, None], block[:, :, col], 0)
        a[sel] = (block - factors[:, :, None] * prow[:, None, :]) % p
        piv[sel] = pr + 1
        if (piv == r).all():
            break
    return piv


def inv_modp(a, p):
    """Inverse of a square matrix over GF(p), or None if singular."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    aug = np.concatenate([a % p, np.eye(n, dtype=np.int64)], axis=1)
    red, pivots = rref_modp(aug, p)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        return None
    return red[:, n:]
