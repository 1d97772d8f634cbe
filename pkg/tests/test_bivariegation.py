import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bivarieg.bivariegation import (
    BivariegationCertificate,
    bad_cycle_obstruction,
    bivariegation_certificate,
    certificate_failures,
    degree_obstruction,
    find_path_decomposition,
    fixed_point_check,
    is_bivariegated,
    iterated_bivariegation_profile,
    sides_for_special_set,
    solve_line_graph_equation,
    solve_nested_equation,
    verify_certificate,
)
from bivarieg.corpus import corpus, oracle_is_bivariegated
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
from bivarieg.linegraph import line_graph


def test_cycles_are_bivariegated_iff_length_divisible_by_4():
    for k in range(3, 13):
        assert is_bivariegated(cycle(k)) == (k % 4 == 0)


def test_certificate_contents_on_c8():
    cert = bivariegation_certificate(cycle(8))
    assert cert is not None and not cert.vacuous
    assert verify_certificate(cycle(8), cert)
    assert len(cert.special_edges) == 4
    assert len(cert.side_u) == len(cert.side_w) == 4
    j = cert.to_json()
    assert set(j) == {"special_edges", "side_u", "side_w"}


def test_vacuous_and_odd_orders():
    empty = from_edge_list(0, [])
    cert = bivariegation_certificate(empty)
    assert cert is not None and cert.vacuous
    assert verify_certificate(empty, cert)
    assert bivariegation_certificate(cycle(5)) is None
    # isolated vertices can never have a cross neighbor
    assert not is_bivariegated(from_edge_list(2, []))


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_bivariegated_certificate(n):
    g = complete_bivariegated(n)
    cert = bivariegation_certificate(g)
    assert cert is not None and verify_certificate(g, cert)
    assert cert.special_edges == frozenset((i, n + i) for i in range(n))


def test_detector_agrees_with_naive_oracle_small():
    for g in corpus(6):
        assert is_bivariegated(g) == oracle_is_bivariegated(g), g.edges()


def test_certificate_failure_codes():
    g = cycle(8)
    good = bivariegation_certificate(g)
    assert certificate_failures(g, good) == []
    bad_sides = BivariegationCertificate(good.special_edges, (0, 1, 2), (3, 4, 5, 6, 7))
    assert "sides-unbalanced" in certificate_failures(g, bad_sides)
    not_matching = BivariegationCertificate(
        frozenset({(0, 1), (1, 2), (3, 4), (5, 6)}), good.side_u, good.side_w)
    assert "not-a-matching" in certificate_failures(g, not_matching)
    phantom = BivariegationCertificate(
        frozenset({(0, 2), (1, 3), (4, 6), (5, 7)}), good.side_u, good.side_w)
    fails = certificate_failures(g, phantom)
    assert "special-edge-not-in-graph" in fails
    overlap = BivariegationCertificate(good.special_edges, (0, 1, 2, 3), (3, 4, 5, 6, 7))
    assert "sides-not-a-partition" in certificate_failures(g, overlap)
    vac = BivariegationCertificate(frozenset(), (), (), vacuous=True)
    assert certificate_failures(g, vac) == ["vacuous-on-nonempty"]
    c4 = cycle(4)
    good4 = BivariegationCertificate(frozenset({(0, 1), (2, 3)}), (0, 3), (1, 2))
    assert verify_certificate(c4, good4)
    skewed = BivariegationCertificate(frozenset({(0, 1), (1, 2)}), (0, 2), (1, 3))
    assert certificate_failures(c4, skewed)  # not a matching at vertex 1


def test_sides_for_special_set():
    c8 = cycle(8)
    special = frozenset({(0, 1), (2, 3), (4, 5), (6, 7)})
    sides = sides_for_special_set(c8, special)
    assert sides is not None
    side_u, side_w = sides
    assert len(side_u) == len(side_w) == 4
    cert = BivariegationCertificate(special, side_u, side_w)
    assert verify_certificate(c8, cert)
    # an odd number of special edges on the cycle is inconsistent
    assert sides_for_special_set(cycle(6), frozenset({(0, 1), (2, 3), (4, 5)})) is None
    # not a perfect matching
    assert sides_for_special_set(c8, frozenset({(0, 1)})) is None


def test_degree_obstruction():
    assert degree_obstruction(cycle(8)) is None
    assert degree_obstruction(complete(4)) is not None
    assert degree_obstruction(complete_bipartite(1, 3)) is not None  # deg 3 vs 1
    assert degree_obstruction(path(4)) is None


def test_bad_cycle_obstruction():
    assert bad_cycle_obstruction(cycle(8)) is None
    assert bad_cycle_obstruction(cycle(6)) == (0, 1, 2, 3, 4, 5)
    assert bad_cycle_obstruction(path(6)) is None


def test_path_decomposition():
    pd = find_path_decomposition(cycle(8))
    assert pd is not None and len(pd.paths) == 4
    for x, y, z in pd.paths:
        assert cycle(8).degree(y) == 2
        assert not cycle(8).has_edge(x, z)
    assert find_path_decomposition(cycle(6)) is None  # odd overlap with the cycle
    assert find_path_decomposition(path(4)) is None  # q = 3 odd
    assert find_path_decomposition(path(5)) is not None
    assert find_path_decomposition(from_edge_list(0, [])) is not None


def test_path_decomposition_matches_line_graph_bivariegation():
    """The witness exists exactly when L(g) is 2-variegated (connected g)."""
    for g in corpus(6, connected_only=True):
        if g.edge_count() > 10:
            continue
        assert (find_path_decomposition(g) is not None) == \
            is_bivariegated(line_graph(g).graph), g.edges()


def test_solve_line_graph_equation():
    v = solve_line_graph_equation(cycle(8))
    assert v.solution and v.certificate is not None and v.witness is not None
    v = solve_line_graph_equation(complete(4))
    assert not v.solution and v.certificate is None
    j = solve_line_graph_equation(cycle(8)).to_json()
    assert set(j) == {"solution", "certificate", "witness"}
    assert set(j["witness"]) == {"paths"}


def test_solve_nested_equation():
    v = solve_nested_equation(cycle(8))
    assert v.g_bivariegated and v.lg_bivariegated and v.nested_witness is not None
    pd, matching = v.nested_witness
    assert len(matching) == 4
    covered = set()
    for x, y, z in pd.paths:
        inside = [e for e in matching if set(e) <= {x, y, z}]
        assert len(inside) == 1
        covered.update(inside[0])
    assert covered == set(range(8))
    assert solve_nested_equation(cycle(6)).nested_witness is None
    assert solve_nested_equation(complete(4)).nested_witness is None


def test_fixed_points():
    assert fixed_point_check(cycle(4)).conclusion == "fixed_bivariegated"
    assert fixed_point_check(cycle(8)).conclusion == "fixed_bivariegated"
    assert fixed_point_check(cycle(6)).conclusion == "fixed_not_bivariegated"
    assert fixed_point_check(petersen()).conclusion == "not_fixed"
    # C4 + C4 is a disconnected 2-variegated fixed point
    assert fixed_point_check(union([cycle(4), cycle(4)])).conclusion == "fixed_bivariegated"


def test_iterated_profile():
    assert iterated_bivariegation_profile(cycle(8), 3) == [True, True, True]
    assert iterated_bivariegation_profile(cycle(6), 2) == [False, False]
    with pytest.raises(ResourceLimitError) as exc:
        iterated_bivariegation_profile(complete(5), 6, order_cap=64)
    assert isinstance(exc.value.partial, list)


@given(st.integers(min_value=1, max_value=6))
@settings(deadline=None)
def test_line_graph_of_k2n_is_bivariegated(n):
    assert is_bivariegated(line_graph(complete_bipartite(2, n)).graph)
