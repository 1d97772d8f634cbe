import random

import pytest
from hypothesis import strategies as st

from bivarieg.graph import Graph, from_edge_list


def random_graph(n: int, density: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return from_edge_list(n, edges)


@st.composite
def graphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_edge_list(n, chosen)


@st.composite
def permutations_of(draw, n: int):
    return draw(st.permutations(list(range(n))))


@pytest.fixture
def rng():
    return random.Random(20260823)
