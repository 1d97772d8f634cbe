from hypothesis import given, settings
from hypothesis import strategies as st

from bivarieg.graph import complete_bipartite, cycle, from_edge_list, union
from bivarieg.isomorphism import find_isomorphism, is_isomorphic

from conftest import graphs

PRISM = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                           (0, 3), (1, 4), (2, 5)])


def test_regular_non_isomorphic_pair():
    assert not is_isomorphic(complete_bipartite(3, 3), PRISM)


def test_isomorphic_cycles_presented_differently():
    shuffled = cycle(7).relabel([3, 6, 0, 4, 1, 5, 2])
    iso = find_isomorphism(cycle(7), shuffled)
    assert iso is not None
    g, h = cycle(7), shuffled
    for u, v in g.edges():
        assert h.has_edge(iso[u], iso[v])


def test_disconnected():
    a = union([cycle(3), cycle(4)])
    b = union([cycle(4), cycle(3)])
    assert is_isomorphic(a, b)
    assert not is_isomorphic(a, cycle(7))


@given(graphs(max_n=7), st.randoms(use_true_random=False))
@settings(max_examples=50, deadline=None)
def test_relabeled_graph_is_isomorphic(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    iso = find_isomorphism(g, h)
    assert iso is not None
    for u, v in g.edges():
        assert h.has_edge(iso[u], iso[v])
