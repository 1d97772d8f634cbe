"""Line graphs: construction, iteration, and recognition.

Recognition searches for an edge partition into cliques with every vertex on
at most two cliques; a valid partition doubles as a constructive witness from
which the root graph is rebuilt.  Intended scale: order <= ~14.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canonical import canonical_key
from .errors import ResourceLimitError
from .graph import Edge, Graph, from_edge_list
from .isomorphism import is_isomorphic

DEFAULT_ORDER_CAP = 4096


@dataclass(frozen=True)
class LineGraphResult:
    """line_graph vertex i corresponds to host edge edge_map[i] (sorted edges)."""

    graph: Graph
    edge_map: tuple[Edge, ...]

    def vertex_of_edge(self, e: Edge) -> int:
        return self.edge_map.index(e)


def line_graph(g: Graph) -> LineGraphResult:
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    pairs = []
    for v in range(g.n):
        at_v = sorted(index[(min(v, u), max(v, u))] for u in g.adj[v])
        pairs += [(a, b) for i, a in enumerate(at_v) for b in at_v[i + 1:]]
    return LineGraphResult(from_edge_list(len(edges), pairs), tuple(edges))


def iterated_line_graph(g: Graph, k: int, order_cap: int = DEFAULT_ORDER_CAP) -> Graph:
    """L^k(g); raises ResourceLimitError if an intermediate order exceeds the cap."""
    cur = g
    for step in range(1, k + 1):
        nxt = line_graph(cur).graph
        if nxt.n > order_cap:
            raise ResourceLimitError(
                f"iterated line graph exceeds order cap {order_cap} at k={step}"
            )
        cur = nxt
    return cur


@dataclass(frozen=True)
class KrauszPartition:
    """Edge partition into cliques witnessing that a graph is a line graph.

    root_edge_map pairs each root edge with the analyzed-graph vertex it
    corresponds to under line_graph(root) ~ analyzed graph.
    """

    cliques: tuple[frozenset[int], ...]
    root: Graph
    root_edge_map: tuple[tuple[Edge, int], ...]


def _component_partitions(g: Graph, comp: list[int]) -> list[list[frozenset[int]]]:
    """All clique partitions of the component's edges with <=2 cliques/vertex."""
    edges = [(u, v) for u in comp for v in sorted(g.adj[u]) if u < v]
    covered: set[Edge] = set()
    load = {v: 0 for v in comp}
    chosen: list[frozenset[int]] = []
    results: list[list[frozenset[int]]] = []

    def candidate_cliques(u: int, v: int) -> list[tuple[int, ...]]:
        ext = sorted(
            w for w in g.adj[u] & g.adj[v]
            if load[w] < 2
            and (min(u, w), max(u, w)) not in covered
            and (min(v, w), max(v, w)) not in covered
        )
        cands: list[tuple[int, ...]] = []

        def grow(prefix: list[int], pool: list[int]) -> None:
            cands.append(tuple(prefix))
            for i, w in enumerate(pool):
                if all(g.has_edge(w, x) and (min(w, x), max(w, x)) not in covered
                       for x in prefix if x not in (u, v)):
                    grow(prefix + [w], pool[i + 1:])

        grow([u, v], ext)
        # larger cliques first: steers toward the coarse partition early
        cands.sort(key=lambda c: (-len(c), c))
        return cands

    def rec() -> None:
        nxt = next((e for e in edges if e not in covered), None)
        if nxt is None:
            results.append(list(chosen))
            return
        u, v = nxt
        if load[u] >= 2 or load[v] >= 2:
            return
        for cand in candidate_cliques(u, v):
            new_edges = [(min(a, b), max(a, b)) for i, a in enumerate(cand) for b in cand[i + 1:]]
            covered.update(new_edges)
            for w in cand:
                load[w] += 1
            chosen.append(frozenset(cand))
            # a saturated vertex may not have uncovered edges left
            ok = all(
                load[w] < 2
                or all((min(w, x), max(w, x)) in covered for x in g.adj[w])
                for w in cand
            )
            if ok:
                rec()
            chosen.pop()
            for w in cand:
                load[w] -= 1
            covered.difference_update(new_edges)

    rec()
    return results


def _root_from_cliques(
    g: Graph, cliques: list[frozenset[int]]
) -> Optional[tuple[Graph, list[tuple[Edge, int]]]]:
    """Rebuild the root graph: one root vertex per clique, pendants for
    vertices on a single clique, a K2 component per isolated vertex."""
    clique_ids_of: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for i, c in enumerate(cliques):
        for v in c:
            clique_ids_of[v].append(i)
    nxt = len(cliques)
    root_edges: list[Edge] = []
    edge_map: list[tuple[Edge, int]] = []
    seen_pairs: set[Edge] = set()
    for v in range(g.n):
        ids = clique_ids_of[v]
        if len(ids) == 2:
            e = (min(ids), max(ids))
            if e in seen_pairs:
                return None  # two analyzed vertices on the same clique pair
            seen_pairs.add(e)
        elif len(ids) == 1:
            e = (ids[0], nxt)
            nxt += 1
        else:  # isolated analyzed vertex -> fresh K2 component
            e = (nxt, nxt + 1)
            nxt += 2
        root_edges.append(e)
        edge_map.append((e, v))
    return from_edge_list(nxt, root_edges), edge_map


def krausz_partition(g: Graph) -> Optional[KrauszPartition]:
    """A Krausz witness with the smallest reconstructible root, or None.

    Root choice is deterministic: per component, the valid partition whose
    root minimizes (order, canonical form).  For a K3 component both K3 and
    K1,3 are valid roots; the 3-vertex root wins.
    """
    all_cliques: list[frozenset[int]] = []
    for comp in g.components():
        if len(comp) == 1 and not g.adj[comp[0]]:
            continue  # isolated vertex: handled by root reconstruction
        options = []
        for cliques in _component_partitions(g, comp):
            sub_root = _root_from_cliques_component_key(g, comp, cliques)
            if sub_root is not None:
                options.append((sub_root, cliques))
        if not options:
            return None
        options.sort(key=lambda t: t[0])
        all_cliques.extend(sorted(options[0][1], key=sorted))
    built = _root_from_cliques(g, all_cliques)
    if built is None:
        return None
    root, edge_map = built
    return KrauszPartition(tuple(all_cliques), root, tuple(edge_map))


def _root_from_cliques_component_key(g, comp, cliques):
    """Sort key (order, canonical masks) of the component root, or None."""
    clique_ids_of: dict[int, list[int]] = {v: [] for v in comp}
    for i, c in enumerate(cliques):
        for v in c:
            clique_ids_of[v].append(i)
    nxt = len(cliques)
    edges = []
    seen = set()
    for v in comp:
        ids = clique_ids_of[v]
        if len(ids) == 2:
            e = (min(ids), max(ids))
            if e in seen:
                return None
            seen.add(e)
        else:
            e = (ids[0], nxt)
            nxt += 1
        edges.append(e)
    return canonical_key(from_edge_list(nxt, edges))


def is_line_graph(g: Graph) -> bool:
    return krausz_partition(g) is not None


def verify_krausz(g: Graph, kp: KrauszPartition) -> bool:
    """Direct check of the two partition invariants plus root faithfulness."""
    covered: dict[Edge, int] = {}
    for c in kp.cliques:
        vs = sorted(c)
        if not g.subgraph_is_clique(vs):
            return False
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                covered[(a, b)] = covered.get((a, b), 0) + 1
    if set(covered) != set(g.edges()) or any(k != 1 for k in covered.values()):
        return False
    per_vertex = [0] * g.n
    for c in kp.cliques:
        for v in c:
            per_vertex[v] += 1
    if any(k > 2 for k in per_vertex):
        return False
    return is_isomorphic(line_graph(kp.root).graph, g)
