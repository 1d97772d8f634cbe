import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from bivarieg._kernels import _canon_masks_py, canon_masks
from bivarieg.canonical import canonical_graph, canonical_key
from bivarieg.isomorphism import is_isomorphic

from conftest import graphs


@given(graphs(max_n=7), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_canonical_key_is_isomorphism_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_key(g.relabel(perm)) == canonical_key(g)


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_canonical_graph_is_isomorphic_copy(g):
    h = canonical_graph(g)
    assert is_isomorphic(g, h)
    assert canonical_key(h) == canonical_key(g)


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_kernel_matches_pure_fallback(g):
    arr = np.asarray(g.masks, dtype=np.uint64)
    a = tuple(int(x) for x in canon_masks(g.n, arr))
    b = tuple(int(x) for x in _canon_masks_py(g.n, arr.copy()))
    assert a == b


def test_distinguishes_non_isomorphic_same_degrees():
    # K3,3 and the triangular prism: both 3-regular on 6 vertices
    from bivarieg.graph import complete_bipartite, from_edge_list

    k33 = complete_bipartite(3, 3)
    prism = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                               (0, 3), (1, 4), (2, 5)])
    assert canonical_key(k33) != canonical_key(prism)
