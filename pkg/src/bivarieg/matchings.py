"""Exhaustive perfect-matching enumeration by backtracking."""

from __future__ import annotations

from .graph import Edge, Graph

Matching = frozenset[Edge]


def enumerate_perfect_matchings(g: Graph) -> list[Matching]:
    """All perfect matchings, deterministic (lexicographic on edge lists)."""
    if g.n % 2:
        return []
    out: list[Matching] = []
    covered = [False] * g.n
    chosen: list[Edge] = []

    def rec() -> None:
        v = next((i for i in range(g.n) if not covered[i]), None)
        if v is None:
            out.append(frozenset(chosen))
            return
        covered[v] = True
        for u in sorted(g.adj[v]):
            if not covered[u]:
                covered[u] = True
                chosen.append((v, u) if v < u else (u, v))
                rec()
                chosen.pop()
                covered[u] = False
        covered[v] = False

    rec()
    return out
