"""Graph isomorphism by backtracking with iterated degree refinement.

Intended for small graphs (order <= ~12).  Refinement colors are hashes of
(own color, sorted neighbor colors) iterated to a fixed point; the
backtracking then only maps vertices with equal final colors.
"""

from __future__ import annotations

from typing import Optional

from .graph import Graph


def _refine_colors(g: Graph) -> list[int]:
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        sig = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            break
        colors = new
    return colors


def find_isomorphism(g1: Graph, g2: Graph) -> Optional[dict[int, int]]:
    """A vertex bijection g1 -> g2 preserving adjacency, or None."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return None
    c1, c2 = _refine_colors(g1), _refine_colors(g2)
    if sorted(c1) != sorted(c2):
        return None
    by_color2: dict[int, list[int]] = {}
    for v, c in enumerate(c2):
        by_color2.setdefault(c, []).append(v)
    # map most-constrained (rarest color, highest degree) vertices first
    order = sorted(range(g1.n), key=lambda v: (len(by_color2[c1[v]]), -g1.degree(v), v))

    mapping: dict[int, int] = {}
    used = [False] * g2.n

    def extend(i: int) -> bool:
        if i == g1.n:
            return True
        v = order[i]
        for w in by_color2[c1[v]]:
            if used[w]:
                continue
            ok = True
            for u in g1.adj[v]:
                if u in mapping and mapping[u] not in g2.adj[w]:
                    ok = False
                    break
            if ok:
                for u in range(g1.n):
                    if u in mapping and u not in g1.adj[v] and mapping[u] in g2.adj[w]:
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                del mapping[v]
                used[w] = False
        return False

    return dict(sorted(mapping.items())) if extend(0) else None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None
