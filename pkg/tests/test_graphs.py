import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intpow import (
    Graph,
    InvalidKError,
    InvalidVertexError,
    ParseError,
    UNREACHABLE,
    bfs_distances,
    connected_components,
    format_graph,
    graph_power,
    graph_power_oracle,
    parse_graph,
)
from testutil import floyd_warshall, graphs, random_graph, relabel_graph

P5 = Graph.path(5)


def test_graph_basic_accessors():
    g = Graph(3, [(0, 1), (1, 2)])
    assert g.n == 3
    assert g.m == 2
    assert g.neighbors(1) == (0, 2)
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 2)


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidVertexError):
        Graph(3, [(0, 3)])


def test_bfs_p5_from_end():
    assert bfs_distances(P5, 0) == [0, 1, 2, 3, 4]


def test_bfs_single_vertex():
    assert bfs_distances(Graph(1), 0) == [0]


def test_bfs_disconnected():
    g = Graph(3, [(0, 1)])
    assert bfs_distances(g, 0) == [0, 1, UNREACHABLE]


def test_bfs_source_out_of_range():
    with pytest.raises(InvalidVertexError):
        bfs_distances(P5, 5)


def test_power_p5_squared():
    expected = {(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)}
    assert graph_power(P5, 2).edge_set == frozenset(expected)


def test_power_k1_is_identity():
    assert graph_power(P5, 1) == P5


def test_power_p5_k4_is_complete():
    assert graph_power(P5, 4) == Graph.complete(5)
    assert graph_power(P5, 9) == Graph.complete(5)


def test_power_rejects_k0():
    with pytest.raises(InvalidKError):
        graph_power(P5, 0)
    with pytest.raises(InvalidKError):
        graph_power_oracle(P5, 0)


def test_power_disconnected_stays_disconnected():
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    p = graph_power(g, 3)
    assert p.edge_set == frozenset({(0, 1), (2, 3), (2, 4), (3, 4)})


def test_oracle_matches_on_named_cases():
    cases = [(P5, 2), (P5, 3), (Graph.complete(2), 5), (Graph(3), 3), (Graph(1), 1)]
    for g, k in cases:
        assert graph_power(g, k) == graph_power_oracle(g, k)


def test_both_power_routes_match_floyd_warshall():
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng, max_n=9)
        dist = floyd_warshall(g)
        for k in (1, 2, 3):
            expected = frozenset(
                (u, v)
                for u in range(g.n)
                for v in range(u + 1, g.n)
                if dist[u][v] is not None and dist[u][v] <= k
            )
            assert graph_power(g, k).edge_set == expected
            assert graph_power_oracle(g, k).edge_set == expected


def test_components_p5():
    assert connected_components(P5) == [[0, 1, 2, 3, 4]]


def test_components_two_parts():
    g = Graph(5, [(0, 1), (2, 4)])
    assert connected_components(g) == [[0, 1], [2, 4], [3]]


def test_components_edgeless():
    assert connected_components(Graph(3)) == [[0], [1], [2]]


@settings(max_examples=200)
@given(graphs(max_n=10), st.integers(min_value=1, max_value=5))
def test_power_equals_oracle(g, k):
    assert graph_power(g, k) == graph_power_oracle(g, k)


@settings(max_examples=100)
@given(graphs(max_n=10), st.integers(min_value=1, max_value=4))
def test_power_monotone_in_k(g, k):
    assert graph_power(g, k).edge_set <= graph_power(g, k + 1).edge_set


@settings(max_examples=100)
@given(graphs(max_n=9), st.integers(min_value=1, max_value=4), st.randoms())
def test_power_commutes_with_relabeling(g, k, rnd):
    permutation = list(range(g.n))
    rnd.shuffle(permutation)
    direct = relabel_graph(graph_power(g, k), permutation)
    relabeled_first = graph_power(relabel_graph(g, permutation), k)
    assert direct == relabeled_first


@settings(max_examples=100)
@given(graphs(max_n=10))
def test_power_diameter_reaches_component_closure(g):
    """A large enough k turns every component into a clique."""
    p = graph_power(g, max(1, g.n))
    expected = set()
    for component in connected_components(g):
        expected.update(
            (u, v) for i, u in enumerate(component) for v in component[i + 1 :]
        )
    assert p.edge_set == frozenset(expected)


P5_TEXT = "5 4\n1 2\n2 3\n3 4\n4 5\n"


def test_parse_graph_p5():
    assert parse_graph(P5_TEXT) == P5


def test_format_parse_round_trip():
    rng = random.Random(7)
    for _ in range(25):
        g = random_graph(rng, max_n=10)
        assert parse_graph(format_graph(g)) == g


def test_parse_rejects_loop_with_line_number():
    with pytest.raises(ParseError) as err:
        parse_graph("2 1\n1 1\n", source="bad.graph")
    assert "bad.graph:2" in str(err.value)
    assert "self-loop" in str(err.value)


def test_parse_rejects_duplicate_edge():
    with pytest.raises(ParseError) as err:
        parse_graph("3 2\n1 2\n1 2\n")
    assert err.value.line == 3


def test_parse_rejects_out_of_range():
    with pytest.raises(ParseError) as err:
        parse_graph("3 1\n1 4\n")
    assert err.value.line == 2


def test_parse_rejects_unordered_pair():
    with pytest.raises(ParseError):
        parse_graph("3 1\n2 1\n")


def test_parse_rejects_wrong_edge_count():
    with pytest.raises(ParseError) as err:
        parse_graph("3 2\n1 2\n")
    assert err.value.line == 1


def test_parse_rejects_garbage_header():
    with pytest.raises(ParseError):
        parse_graph("3\n")
    with pytest.raises(ParseError):
        parse_graph("")
