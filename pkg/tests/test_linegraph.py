import pytest

from bivarieg.canonical import canonical_key
from bivarieg.corpus import corpus
from bivarieg.errors import ResourceLimitError
from bivarieg.graph import (
    complete,
    complete_bipartite,
    complete_bivariegated,
    cycle,
    from_edge_list,
    path,
    petersen,
    union,
)
from bivarieg.isomorphism import is_isomorphic
from bivarieg.linegraph import (
    is_line_graph,
    iterated_line_graph,
    krausz_partition,
    line_graph,
    verify_krausz,
)

CLAW = complete_bipartite(1, 3)


def test_line_graph_construction():
    lg = line_graph(path(4))
    assert lg.graph.n == 3 and lg.graph.edges() == [(0, 1), (1, 2)]
    assert lg.edge_map == ((0, 1), (1, 2), (2, 3))
    assert is_isomorphic(line_graph(cycle(5)).graph, cycle(5))
    # L(K4) is 4-regular on 6 vertices (the octahedron)
    lk4 = line_graph(complete(4)).graph
    assert lk4.n == 6 and all(lk4.degree(v) == 4 for v in range(6))


@pytest.mark.parametrize("n", range(1, 9))
def test_line_graph_of_k2n_is_complete_bivariegated(n):
    assert is_isomorphic(line_graph(complete_bipartite(2, n)).graph,
                         complete_bivariegated(n))


def test_claw_is_not_a_line_graph():
    assert krausz_partition(CLAW) is None
    assert not is_line_graph(CLAW)


def test_k3_root_prefers_smaller_order():
    kp = krausz_partition(complete(3))
    assert kp is not None
    # both K3 and K1,3 are valid roots of K3; the 3-vertex root wins
    assert kp.root.n == 3
    assert canonical_key(kp.root) == canonical_key(complete(3))


def test_krausz_on_known_line_graphs():
    for g in (cycle(6), petersen(), complete_bivariegated(3),
              union([complete(3), path(3)]), from_edge_list(2, []),
              from_edge_list(0, [])):
        if is_line_graph(g):
            kp = krausz_partition(g)
            assert verify_krausz(g, kp)
            assert is_isomorphic(line_graph(kp.root).graph, g)


def test_petersen_is_not_a_line_graph():
    assert not is_line_graph(petersen())


def test_isolated_vertices_get_k2_roots():
    g = from_edge_list(3, [])
    kp = krausz_partition(g)
    assert kp is not None
    assert kp.root.n == 6 and kp.root.edge_count() == 3
    assert verify_krausz(g, kp)


def test_recognition_matches_root_search_oracle():
    """Connected graphs of order <= 5: g is a line graph iff some connected
    graph h with <= 6 vertices and exactly g.n edges has L(h) isomorphic to g."""
    roots = [h for h in corpus(6, connected_only=True)]
    for g in corpus(5, connected_only=True):
        oracle = any(
            h.edge_count() == g.n and is_isomorphic(line_graph(h).graph, g)
            for h in roots
        )
        assert is_line_graph(g) == oracle, g.edges()


def test_iterated_line_graph_and_cap():
    assert is_isomorphic(iterated_line_graph(cycle(5), 3), cycle(5))
    assert iterated_line_graph(path(5), 4).n == 1
    with pytest.raises(ResourceLimitError):
        iterated_line_graph(complete(5), 5, order_cap=100)
