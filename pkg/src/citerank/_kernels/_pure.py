"""Pure numpy implementations of the hot kernels.

Same contracts as the compiled module `_fast`; used when the extension is
not built or when CITERANK_PURE is set.
"""

from __future__ import annotations

import numpy as np

# Above this many cells the dense pair-count accumulator is not worth the
# allocation and a sort-based reduction is used instead.
_DENSE_CELLS = 1 << 22


def count_pairs(src, dst, mult, n, drop_diagonal):
    """Sum multiplicities per (src, dst) journal pair.

    src, dst : int64 arrays of journal indices, one entry per citation
    mult     : int64 multiplicities, same length
    n        : number of journals (indices are < n)
    drop_diagonal : drop entries with src == dst

    Returns (src_u, dst_u, w) int64 arrays sorted by (src, dst); pairs with
    zero total never appear.
    """
    src = np.ascontiguousarray(src, dtype=np.int64)
    dst = np.ascontiguousarray(dst, dtype=np.int64)
    mult = np.ascontiguousarray(mult, dtype=np.int64)
    if drop_diagonal:
        keep = src != dst
        src, dst, mult = src[keep], dst[keep], mult[keep]
    if src.size == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty.copy(), empty.copy()
    key = src * n + dst
    if n * n <= _DENSE_CELLS:
        totals = np.bincount(key, weights=mult, minlength=n * n)
        nz = np.flatnonzero(totals)
        w = totals[nz].astype(np.int64)  # integer-valued by construction
        return nz // n, nz % n, w
    order = np.argsort(key, kind="stable")
    skey = key[order]
    starts = np.flatnonzero(np.r_[True, skey[1:] != skey[:-1]])
    w = np.add.reduceat(mult[order], starts)
    uk = skey[starts]
    return uk // n, uk % n, w


def matvec(n, rows, cols, vals, v):
    """y = M v for M given in coordinate form: y[rows[p]] += vals[p] * v[cols[p]]."""
    return np.bincount(rows, weights=vals * v[cols], minlength=n)
