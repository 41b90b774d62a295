import math
from fractions import Fraction

import pytest

from lllocal.applications.edge_coloring import chromatic_index_brute_force, verify_edge_coloring
from lllocal.applications.schreier import schreier_edge_coloring, schreier_graph, translation_action
from lllocal.applications.sections import estimate_F_star, f_star_distribution
from lllocal.graphs.core import Graph
from lllocal.graphs.generators import cycle, path

ACTIONS = [
    ((5,), [1], ()),
    ((8,), [1], ()),
    ((8,), [1], (0,)),
    ((12,), [1], ()),
    ((31,), [1], ()),
    ((60,), [1], ()),
    ((6,), [1, 3], ()),
    ((10,), [1, 5], ()),
    ((20,), [1, 10], ()),
    ((60,), [1, 30], ()),
    ((7,), [1, 2], ()),
    ((9,), [1, 2], ()),
    ((9,), [1, 3], ()),
    ((11,), [1, 3], ()),
    ((12,), [1, 4], ()),
    ((13,), [1, 5], ()),
    ((15,), [1, 5], ()),
    ((21,), [1, 7], ()),
    ((4, 4), [(1, 0), (0, 1)], ()),
    ((5, 6), [(1, 0), (0, 1)], ()),
    ((3, 3), [(1, 0), (0, 1)], ()),
    ((3, 5), [(1, 0), (0, 1)], ()),
    ((5, 3), [(1, 0), (0, 1)], ()),
    ((10,), [1, 2, 5], ()),
    ((12,), [1, 4, 6], ()),
    ((20,), [1, 3, 10], ()),
    ((6, 4), [(1, 0), (0, 1), (3, 0)], ()),
]


@pytest.mark.parametrize("moduli,steps,long", ACTIONS)
def test_schreier_graphs_use_at_most_one_extra_color(moduli, steps, long):
    action = translation_action(moduli, steps, long)
    generators = len(action.generators)
    assert 2 <= generators <= 5
    result = schreier_edge_coloring(action)
    G, _ = schreier_graph(action)
    assert verify_edge_coloring(G, result.colors).ok
    assert result.palette <= generators + 1
    if action.points * generators <= 40:
        assert chromatic_index_brute_force(G) <= result.palette


def private_neighborhoods(delta: int, k: int) -> tuple[Graph, tuple[int, ...]]:
    """k centers; even-numbered ones get delta private leaves, odd-numbered ones delta - 1."""
    edges = []
    leaf = k
    for v in range(k):
        for _ in range(delta - v % 2):
            edges.append((v, leaf))
            leaf += 1
    return Graph.from_edges(leaf, edges), tuple(range(k))


@pytest.mark.parametrize("delta,k", [(2, 16), (3, 24), (4, 40)])
def test_f_star_mean_reaches_the_lower_bound(delta, k):
    G, F = private_neighborhoods(delta, k)
    stats = estimate_F_star(G, F, delta, trials=10_000, seed=delta)
    assert stats.expected_lower == k * Fraction(delta - 1, delta) ** delta
    assert stats.mean >= float(stats.expected_lower) - 3 * stats.std / math.sqrt(stats.trials)


def test_f_star_law_on_private_neighborhoods_is_binomial():
    G = Graph.from_edges(8, [(0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])
    keep = Fraction(8, 27)
    assert f_star_distribution(G, (0, 1), 3) == {0: (1 - keep) ** 2, 1: 2 * keep * (1 - keep), 2: keep**2}


def test_f_star_law_with_shared_neighbors():
    assert f_star_distribution(path(5), (0, 2, 4), 2) == {0: Fraction(1, 4), 1: Fraction(1, 2), 3: Fraction(1, 4)}


@pytest.mark.parametrize("G,F,delta", [(path(5), (0, 2, 4), 2), (cycle(12), (0, 2, 4, 6, 8, 10), 3)])
def test_monte_carlo_matches_the_exact_law(G, F, delta):
    law = f_star_distribution(G, F, delta)
    exact_mean = float(sum(size * weight for size, weight in law.items()))
    stats = estimate_F_star(G, F, delta, trials=10_000, seed=1)
    assert abs(stats.mean - exact_mean) <= 4 * stats.std / math.sqrt(stats.trials)
