"""Exhaustive simple-cycle enumeration for desk-scale graphs (order <= ~16).

Each simple cycle is reported exactly once in canonical form: the vertex
sequence starts at the cycle's minimum vertex and its second vertex is the
smaller of that vertex's two cycle neighbors.  Enumeration is the classic
rooted DFS (root = minimum cycle vertex, all other path vertices larger),
with a configurable count cap (env BIVARIEG_CYCLE_CAP, default 10**6).
"""

from __future__ import annotations

import os

from .errors import ResourceLimitError
from .graph import Edge, Graph, _norm_edge

Cycle = tuple[int, ...]

DEFAULT_CYCLE_CAP = 10 ** 6


def cycle_cap() -> int:
    raw = os.environ.get("BIVARIEG_CYCLE_CAP", "")
    return int(raw) if raw else DEFAULT_CYCLE_CAP


def enumerate_simple_cycles(g: Graph, cap: int | None = None) -> list[Cycle]:
    """All simple cycles of g, canonical, sorted by (length, sequence)."""
    if cap is None:
        cap = cycle_cap()
    out: list[Cycle] = []
    path: list[int] = []
    on_path = [False] * g.n

    def dfs(root: int, v: int) -> None:
        for u in sorted(g.adj[v]):
            if u == root and len(path) >= 3 and path[1] < path[-1]:
                out.append(tuple(path))
                if len(out) > cap:
                    raise ResourceLimitError(
                        f"simple-cycle count exceeds cap {cap} (BIVARIEG_CYCLE_CAP)"
                    )
            elif u > root and not on_path[u]:
                path.append(u)
                on_path[u] = True
                dfs(root, u)
                on_path[u] = False
                path.pop()

    for root in range(g.n):
        path = [root]
        on_path = [False] * g.n
        on_path[root] = True
        dfs(root, root)
    out.sort(key=lambda c: (len(c), c))
    return out


def cycle_edges(c: Cycle) -> list[Edge]:
    return [_norm_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]
