"""Simple undirected graph type and named graph families.

Vertices are the contiguous integers 0..n-1.  Graphs are immutable after
construction; every function in the package treats them as values.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .errors import InputError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices 0..n-1, no loops or multi-edges."""

    __slots__ = ("n", "adj", "masks", "_hash")

    def __init__(self, n: int, adj: tuple[frozenset[int], ...]):
        self.n = n
        self.adj = adj
        # bitmask rows, used by the search kernels
        self.masks = tuple(sum(1 << u for u in nbrs) for nbrs in adj)
        self._hash = hash((n, adj))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, q={self.edge_count()})"

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[Edge]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, in order of smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def relabel(self, perm: dict[int, int] | list[int]) -> "Graph":
        """Image of this graph under the vertex bijection perm (old -> new)."""
        if isinstance(perm, dict):
            perm = [perm[v] for v in range(self.n)]
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges():
            nbrs[perm[u]].add(perm[v])
            nbrs[perm[v]].add(perm[u])
        return Graph(self.n, tuple(frozenset(s) for s in nbrs))

    def subgraph_is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from (possibly repeated) vertex pairs."""
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) out of range for {n} vertices")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in nbrs))


def from_masks(n: int, masks: Iterable[int]) -> Graph:
    adj = tuple(
        frozenset(u for u in range(n) if (m >> u) & 1) for m in masks
    )
    return Graph(n, adj)


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees, sorted non-increasing."""
    return sorted((len(nbrs) for nbrs in g.adj), reverse=True)


def union(graphs: Iterable[Graph]) -> Graph:
    """Disjoint union, vertices renumbered consecutively."""
    edges: list[Edge] = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges())
        off += g.n
    return from_edge_list(off, edges)


# --- named families -------------------------------------------------------

def path(k: int) -> Graph:
    """Path on k vertices (k-1 edges)."""
    if k < 1:
        raise InputError("path needs at least 1 vertex")
    return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise InputError("cycle needs at least 3 vertices")
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    if k < 1:
        raise InputError("complete graph needs at least 1 vertex")
    return from_edge_list(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite(m: int, k: int) -> Graph:
    if m < 1 or k < 1:
        raise InputError("complete bipartite parts must be non-empty")
    return from_edge_list(m + k, [(i, m + j) for i in range(m) for j in range(k)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return from_edge_list(10, edges)


def complete_bivariegated(k: int) -> Graph:
    """Two disjoint K_k's (vertices 0..k-1 and k..2k-1) joined by the matching i -- k+i."""
    if k < 1:
        raise InputError("complete_bivariegated needs k >= 1")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(k + i, k + j) for i in range(k) for j in range(i + 1, k)]
    edges += [(i, k + i) for i in range(k)]
    return from_edge_list(2 * k, edges)


def matching_graph(k: int) -> Graph:
    """k disjoint edges (2i, 2i+1)."""
    if k < 1:
        raise InputError("matching needs k >= 1")
    return from_edge_list(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
    "complete_bivariegated": (complete_bivariegated, 1),
    "matching": (matching_graph, 1),
}


def family(name: str, *params: int) -> Graph:
    """Named family dispatch, e.g. family("cycle", 4) or family("petersen")."""
    if name not in _FAMILIES:
        raise InputError(f"unknown family {name!r}; known: {sorted(_FAMILIES)}")
    fn, arity = _FAMILIES[name]
    if len(params) != arity:
        raise InputError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)
