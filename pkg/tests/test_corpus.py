import pytest

from bivarieg.corpus import KNOWN_GRAPH_COUNTS, corpus, corpus_count
from bivarieg.errors import InputError
from bivarieg.graph import degree_sequence


@pytest.mark.parametrize("order", range(1, 8))
def test_census_counts(order):
    assert corpus_count(order) == KNOWN_GRAPH_COUNTS[order - 1]


def test_corpus_is_duplicate_free_and_deterministic():
    first = [g.masks for g in corpus(5)]
    second = [g.masks for g in corpus(5)]
    assert first == second
    assert len(set(first)) == len(first)


def test_connected_filter():
    total = sum(1 for _ in corpus(4))
    connected = sum(1 for _ in corpus(4, connected_only=True))
    assert total == 1 + 2 + 4 + 11
    assert connected == 1 + 1 + 2 + 6  # connected graphs on 1..4 vertices


def test_corpus_covers_all_degree_sequences_order_4():
    seqs = {tuple(degree_sequence(g)) for g in corpus(4) if g.n == 4}
    assert (3, 3, 3, 3) in seqs and (0, 0, 0, 0) in seqs
    assert len(seqs) == 11  # every order-4 graph has a distinct degree sequence


def test_order_bounds():
    with pytest.raises(InputError):
        list(corpus(0))
    with pytest.raises(InputError):
        list(corpus(10))
