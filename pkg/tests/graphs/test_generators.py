import networkx as nx
import pytest

from lllocal.exceptions import InvalidInputError
from lllocal.graphs import generators
from lllocal.graphs.core import components
from tests.strategies import to_networkx


def test_small_families():
    assert generators.path(4).edges == ((0, 1), (1, 2), (2, 3))
    assert generators.cycle(4).edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert generators.complete(4).m == 6
    assert generators.star(3).neighbors(0) == (1, 2, 3)


def test_cycle_needs_three_vertices():
    with pytest.raises(InvalidInputError):
        generators.cycle(2)


def test_grid_ids_and_dimensions():
    G = generators.grid(4, 3)
    assert G.n == 12
    assert G.m == 3 * 3 + 4 * 2
    assert G.has_edge(5, 6) and G.has_edge(5, 9)
    assert not G.has_edge(3, 4)
    assert generators.grid_dimensions(G) == (4, 3)
    assert generators.grid_dimensions(generators.grid(2, 5)) == (2, 5)


def test_grid_dimensions_rejects_other_graphs():
    with pytest.raises(InvalidInputError):
        generators.grid_dimensions(generators.cycle(6))


@pytest.mark.parametrize("n,d", [(10, 2), (20, 3), (50, 4), (200, 5)])
def test_random_regular_is_simple_and_regular(n, d):
    G = generators.random_regular(n, d, seed=n * d)
    assert all(G.degree(v) == d for v in G.vertices())
    assert G.m == n * d // 2
    assert generators.random_regular(n, d, seed=n * d) == G


@pytest.mark.parametrize("n,d", [(5, 3), (4, 4), (3, -1)])
def test_random_regular_rejects_impossible_degrees(n, d):
    with pytest.raises(InvalidInputError):
        generators.random_regular(n, d, seed=0)


def test_random_tree_is_a_tree():
    G = generators.random_tree(30, seed=7)
    assert nx.is_tree(to_networkx(G))


def test_disjoint_union_offsets_blocks():
    G = generators.disjoint_union([generators.path(2), generators.cycle(3)])
    assert G.edges == ((0, 1), (2, 3), (2, 4), (3, 4))
    assert components(G) == [(0, 1), (2, 3, 4)]


def test_random_graph_is_reproducible():
    assert generators.random_graph(12, 0.3, seed=3) == generators.random_graph(12, 0.3, seed=3)
