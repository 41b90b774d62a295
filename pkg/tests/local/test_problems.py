import pytest
from hypothesis import given
from hypothesis import strategies as st

from lllocal.graphs.core import Graph
from lllocal.graphs.generators import cycle, path
from lllocal.local.algorithms import luby_mis, luby_mis_round, own_label, sinkless_orientation_trial
from lllocal.local.problems import (
    edge_coloring_lcl,
    incidence_sinkless_lcl,
    mis_lcl,
    non_monochromatic_lcl,
    proper_coloring_lcl,
    sinkless_orientation_lcl,
)
from lllocal.local.runner import check_lcl, run_local
from lllocal.local.structured import directed, vertex_edge_incidence


@pytest.mark.parametrize(
    "labels,violations",
    [([0, 1, 0, 1], []), ([0, 1, 0, 2], [3]), ([0, 0, 1, 1], [0, 1, 2, 3])],
)
def test_proper_coloring(labels, violations):
    check = check_lcl(proper_coloring_lcl(2), cycle(4), labels)
    assert check.violations == violations
    assert check.ok is (not violations)


@pytest.mark.parametrize(
    "labels,violations",
    [([0, 1, 0], []), ([1, 0, 1], []), ([1, 1, 0], [0, 1]), ([0, 0, 0], [0, 1, 2]), ([2, 1, 0], [0, 1])],
)
def test_maximal_independent_set(labels, violations):
    assert check_lcl(mis_lcl(), path(3), labels).violations == violations


def test_non_monochromatic_lets_isolated_vertices_pass():
    assert check_lcl(non_monochromatic_lcl(), Graph.empty(2), [0, 0]).ok
    assert check_lcl(non_monochromatic_lcl(), path(2), [5, 5]).violations == [0, 1]


def test_sinkless_orientation_on_directed_graphs():
    assert check_lcl(sinkless_orientation_lcl(), directed(cycle(3), [(0, 1), (1, 2), (2, 0)]), [0] * 3).ok
    assert check_lcl(sinkless_orientation_lcl(), directed(path(3), [(0, 1), (1, 2)]), [0] * 3).violations == [2]


def test_incidence_sinkless_orientation():
    sg = vertex_edge_incidence(cycle(4))
    # edges (0,1) (0,3) (1,2) (2,3) oriented 0->1->2->3->0; edge nodes carry the head's name
    labels = [0, 1, 2, 3, 1, 0, 2, 3]
    assert check_lcl(incidence_sinkless_lcl(), sg, labels).ok
    labels[4] = 0
    assert check_lcl(incidence_sinkless_lcl(), sg, labels).violations == [0]
    labels[4] = 7
    assert check_lcl(incidence_sinkless_lcl(), sg, labels).violations == [0, 1]


def test_edge_coloring_on_incidence_graph():
    sg = vertex_edge_incidence(path(3))
    assert check_lcl(edge_coloring_lcl(2), sg, [0, 0, 0, 0, 1]).ok
    assert check_lcl(edge_coloring_lcl(2), sg, [0, 0, 0, 1, 1]).violations == [3, 4]
    assert check_lcl(edge_coloring_lcl(2), sg, [0, 0, 0, 0, 2]).violations == [4]


def test_own_label_and_luby_round():
    assert run_local(own_label(), path(3), [5, 6, 7], 0) == [5, 6, 7]
    assert run_local(luby_mis_round(), path(3), [0, 2, 1], 1) == [0, 1, 0]


def test_sinkless_trial_points_by_parity():
    sg = vertex_edge_incidence(path(2))
    assert run_local(sinkless_orientation_trial(), sg, [4, 9, 3], 1) == [4, 9, 9]
    assert run_local(sinkless_orientation_trial(), sg, [4, 9, 2], 1) == [4, 9, 4]


@given(st.permutations(range(12)))
def test_luby_view_radius_is_exact(ids):
    ids = list(ids)
    algorithm = luby_mis(2)
    assert algorithm.rounds == 3
    assert run_local(algorithm, path(12), ids, 3) == run_local(algorithm, path(12), ids, 11)


@given(st.permutations(range(12)))
def test_enough_luby_phases_give_a_maximal_independent_set(ids):
    output = run_local(luby_mis(6), path(12), list(ids), 11)
    assert check_lcl(mis_lcl(), path(12), output).ok
