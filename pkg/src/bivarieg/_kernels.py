"""Canonical-labeling kernel, numba-accelerated with a pure-Python fallback.

The kernel computes, for a graph given as adjacency bitmask rows, the
lexicographically greatest row code over all vertex orderings and returns the
relabeled mask rows.  This is the hot loop of corpus generation (hundreds of
thousands of calls), so it carries an ``@njit`` version; set
``BIVARIEG_NO_NUMBA=1`` to force the fallback.  ``benchmarks/bench_canonical.py``
compares the two paths.
"""

from __future__ import annotations

import os

import numpy as np

_MAXN = 16


def _canon_masks_py(n: int, masks: np.ndarray) -> np.ndarray:
    """Pure-numpy/Python reference implementation of the kernel."""
    out = np.zeros(n, dtype=np.uint64)
    if n == 0:
        return out
    best = np.full(n, -1, dtype=np.int64)
    order = np.zeros(n, dtype=np.int64)
    best_order = np.zeros(n, dtype=np.int64)
    rows = np.zeros((n + 1, n), dtype=np.int64)  # rows[d][v]: row of v at depth d
    cand_r = np.zeros((n, n), dtype=np.int64)
    cand_v = np.zeros((n, n), dtype=np.int64)
    cand_cnt = np.zeros(n, dtype=np.int64)
    cand_idx = np.zeros(n, dtype=np.int64)
    picked = np.full(n, -1, dtype=np.int64)
    m = masks.astype(np.int64)

    def fill_cands(depth: int, used: int) -> None:
        cnt = 0
        for v in range(n):
            if (used >> v) & 1:
                continue
            cand_r[depth, cnt] = rows[depth, v]
            cand_v[depth, cnt] = v
            cnt += 1
        # insertion sort by (-r, v)
        for i in range(1, cnt):
            r, v = cand_r[depth, i], cand_v[depth, i]
            j = i - 1
            while j >= 0 and (cand_r[depth, j] < r or (cand_r[depth, j] == r and cand_v[depth, j] > v)):
                cand_r[depth, j + 1] = cand_r[depth, j]
                cand_v[depth, j + 1] = cand_v[depth, j]
                j -= 1
            cand_r[depth, j + 1] = r
            cand_v[depth, j + 1] = v
        cand_cnt[depth] = cnt
        cand_idx[depth] = 0

    used = 0
    depth = 0
    fill_cands(0, used)
    while depth >= 0:
        if picked[depth] >= 0:
            used &= ~(1 << picked[depth])
            picked[depth] = -1
        if cand_idx[depth] >= cand_cnt[depth]:
            depth -= 1
            continue
        i = cand_idx[depth]
        cand_idx[depth] = i + 1
        r = cand_r[depth, i]
        v = cand_v[depth, i]
        if r < best[depth]:
            cand_idx[depth] = cand_cnt[depth]
            continue
        if r > best[depth]:
            best[depth] = r
            for d in range(depth + 1, n):
                best[d] = -1
        order[depth] = v
        picked[depth] = v
        used |= 1 << v
        if depth + 1 == n:
            best_order[:] = order
            continue
        for u in range(n):
            rows[depth + 1, u] = (rows[depth, u] << 1) | ((m[u] >> v) & 1)
        depth += 1
        fill_cands(depth, used)

    for i in range(n):
        acc = 0
        mi = m[best_order[i]]
        for j in range(n):
            if (mi >> best_order[j]) & 1:
                acc |= 1 << j
        out[i] = acc
    return out


def _make_njit():
    from numba import njit  # noqa: PLC0415

    return njit(cache=True)(_canon_masks_py)


_USE_NUMBA = os.environ.get("BIVARIEG_NO_NUMBA", "") not in ("1", "true", "yes")

if _USE_NUMBA:
    try:
        canon_masks = _make_njit()
        USING_NUMBA = True
    except ImportError:  # pragma: no cover - numba present in normal installs
        canon_masks = _canon_masks_py
        USING_NUMBA = False
else:
    canon_masks = _canon_masks_py
    USING_NUMBA = False
