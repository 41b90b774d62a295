import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lllocal.exceptions import InvalidInputError
from lllocal.graphs.core import (
    Graph,
    ball,
    components,
    distances_from,
    induced_subgraph,
    is_independent,
    line_graph,
    max_degree,
    power_graph,
)
from lllocal.graphs.generators import cycle, path, star
from tests.strategies import graphs, to_networkx


def test_from_edges_collapses_repeats_and_sorts():
    G = Graph.from_edges(4, [(2, 1), (1, 2), (0, 3), (3, 2)])
    assert G.edges == ((0, 3), (1, 2), (2, 3))
    assert G.m == 3
    assert G.neighbors(2) == (1, 3)
    assert G.edge_index(3, 0) == 0
    assert G.incident_edges(3) == (0, 2)


def test_rejects_self_loops_and_out_of_range_edges():
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(0, 3)])


def test_rejects_asymmetric_adjacency():
    with pytest.raises(InvalidInputError):
        Graph(2, [[1], []])


def test_missing_edge_lookup_raises():
    with pytest.raises(InvalidInputError):
        path(3).edge_index(0, 2)


def test_ball_on_path():
    G = path(6)
    assert ball(G, 2, 0) == (2,)
    assert ball(G, 2, 1) == (1, 2, 3)
    assert ball(G, 0, 3) == (0, 1, 2, 3)
    assert distances_from(G, 0, limit=2) == {0: 0, 1: 1, 2: 2}


def test_negative_radius_rejected():
    with pytest.raises(InvalidInputError):
        ball(path(3), 0, -1)


@given(graphs(max_n=9), st.integers(1, 3))
def test_power_graph_matches_networkx(G, R):
    expected = {tuple(sorted(e)) for e in nx.power(to_networkx(G), R).edges()}
    assert set(power_graph(G, R).edges) == expected


@given(graphs(max_n=9))
def test_line_graph_matches_networkx(G):
    L, edge_ids = line_graph(G)
    assert [e.endpoints for e in edge_ids] == list(G.edges)
    expected = {
        tuple(sorted((G.edge_index(*a), G.edge_index(*b))))
        for a, b in nx.line_graph(to_networkx(G)).edges()
    }
    assert set(L.edges) == expected


@given(graphs(max_n=10))
def test_components_match_networkx(G):
    expected = sorted(tuple(sorted(c)) for c in nx.connected_components(to_networkx(G)))
    assert components(G) == expected


def test_components_within_a_subset():
    G = cycle(6)
    assert components(G, within=[0, 1, 3, 4]) == [(0, 1), (3, 4)]


def test_induced_subgraph_reindexes():
    H, old_ids, new_id = induced_subgraph(cycle(5), [4, 0, 1])
    assert old_ids == [0, 1, 4]
    assert new_id == {0: 0, 1: 1, 4: 2}
    assert H.edges == ((0, 1), (0, 2))


def test_max_degree_and_independence():
    G = star(4)
    assert max_degree(G) == 4
    assert max_degree(G, within=[0, 1]) == 1
    assert max_degree(Graph.empty()) == 0
    assert is_independent(G, [1, 2, 3])
    assert not is_independent(G, [0, 1])
