"""Canonical labeling for small graphs.

The canonical form is the lexicographically greatest sequence of adjacency
rows (row d = bits toward already-placed vertices) over all vertex orderings,
found by depth-first branch-and-bound with prefix pruning.  Intended scale is
n <= ~10; everything downstream that needs a deterministic graph ordering
(corpus dedup, report sorting) keys on this.
"""

from __future__ import annotations

from .graph import Graph


def canonical_order_masks(n: int, masks: tuple[int, ...]) -> list[int]:
    """Vertex ordering (position -> original vertex) realizing the max code.

    Invariant of the search: the current partial code always equals the best
    known code's prefix — whenever a row improves on the incumbent, the
    incumbent is overwritten in place (with -1 sentinels below), so pruning
    is a plain per-row comparison.
    """
    if n == 0:
        return []
    best = [-1] * n
    best_order: list[int] | None = None
    order = [0] * n

    def dfs(depth: int, used: int) -> None:
        nonlocal best_order
        if depth == n:
            best_order = order[:]
            return
        cands = []
        for v in range(n):
            if (used >> v) & 1:
                continue
            m = masks[v]
            r = 0
            for i in range(depth):
                r = (r << 1) | ((m >> order[i]) & 1)
            cands.append((r, v))
        cands.sort(key=lambda t: (-t[0], t[1]))
        for r, v in cands:
            if r < best[depth]:
                break  # sorted descending: the rest are worse too
            if r > best[depth]:
                best[depth] = r
                for i in range(depth + 1, n):
                    best[i] = -1
            order[depth] = v
            dfs(depth + 1, used | (1 << v))

    dfs(0, 0)
    assert best_order is not None
    return best_order


def canonical_masks(n: int, masks: tuple[int, ...]) -> tuple[int, ...]:
    """Canonically relabeled mask rows (kernel-backed, see _kernels)."""
    import numpy as np  # noqa: PLC0415

    from ._kernels import canon_masks  # noqa: PLC0415

    arr = np.asarray(masks, dtype=np.uint64)
    return tuple(int(x) for x in canon_masks(n, arr))


def canonical_graph(g: Graph) -> Graph:
    """Isomorphic copy with canonical vertex numbering."""
    order = canonical_order_masks(g.n, g.masks)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable complete isomorphism invariant: (n, canonical mask rows)."""
    return (g.n, canonical_masks(g.n, g.masks))
