import pytest
from hypothesis import given, settings

from lllocal.applications.edge_coloring import (
    chromatic_index_brute_force,
    verify_edge_coloring,
    verify_edge_coloring_as_lcl,
    vizing_edge_coloring,
)
from lllocal.exceptions import BudgetExceededError
from lllocal.graphs.core import Graph
from lllocal.graphs.generators import complete, cycle, path, star
from tests.strategies import graphs


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def test_verify_edge_coloring():
    check = verify_edge_coloring(path(3), [0, 0])
    assert check.conflicts == [(0, 1)]
    assert check.vizing_bound == 3
    assert verify_edge_coloring(path(3), {0: 1}).uncolored == [1]
    assert verify_edge_coloring(cycle(4), [0, 1, 1, 0]).ok


@pytest.mark.parametrize("colors,ok", [([0, 1, 1, 0], True), ([0, 1, 0, 1], False), ([0, 1, 1, 2], False)])
def test_lcl_check_agrees_with_direct_check(colors, ok):
    assert verify_edge_coloring_as_lcl(cycle(4), colors, 2) is ok
    if colors[-1] < 2:
        assert verify_edge_coloring(cycle(4), colors).ok is ok


@pytest.mark.parametrize(
    "G,expected",
    [(path(1), 0), (star(4), 4), (cycle(6), 2), (cycle(5), 3), (complete(4), 3), (complete(5), 5), (petersen(), 4)],
)
def test_chromatic_index(G, expected):
    assert chromatic_index_brute_force(G) == expected


def test_chromatic_index_is_capped():
    with pytest.raises(BudgetExceededError):
        chromatic_index_brute_force(complete(12))


@pytest.mark.parametrize("G", [path(1), star(4), cycle(5), complete(5), complete(8), petersen()])
def test_fan_rotation_stays_within_vizing_bound(G):
    check = verify_edge_coloring(G, vizing_edge_coloring(G))
    assert check.ok
    assert check.palette <= check.vizing_bound


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_fan_rotation_colors_any_graph(G):
    colors = vizing_edge_coloring(G)
    check = verify_edge_coloring(G, colors)
    assert check.ok
    assert max(colors.values(), default=-1) < check.vizing_bound
