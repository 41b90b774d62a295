import pytest

from lllocal.applications.coloring import proper_coloring_csp
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.generators import cycle
from lllocal.shattering.partitions import FinitePartition
from lllocal.shattering.witnesses import interval_separation, partition_from_separation
from lllocal.solvers.schedule import class_conflict_graph, greedy_schedule


@pytest.fixture
def blocks():
    G = cycle(12)
    csp = proper_coloring_csp(G, 67)
    return G, csp, partition_from_separation(G, interval_separation(G, 3))


def test_conflict_graph_of_cycle_blocks(blocks):
    _, csp, partition = blocks
    assert partition.classes == ((0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11))
    assert class_conflict_graph(partition, csp).edges == ((0, 1), (0, 3), (1, 2), (2, 3))


def test_greedy_schedule_alternates_blocks(blocks):
    G, csp, partition = blocks
    schedule = greedy_schedule(class_conflict_graph(partition, csp), partition, csp, 2)
    assert len(schedule) == 2
    assert schedule.class_rounds == (0, 1, 0, 1)
    assert schedule.rounds[0] == (0, 1, 2, 6, 7, 8)

    crossing = G.edge_index(2, 3)
    assert schedule.meets[crossing] == (0, 1)
    assert [schedule.s_n(n, crossing) for n in range(2)] == [2, 1]
    assert schedule.eta(1, crossing) == 1

    inner = G.edge_index(0, 1)
    assert schedule.meets[inner] == (0,)
    assert schedule.t(1, inner) == 1
    assert schedule.eta(1, inner) == 0


def test_schedule_needs_s_at_least_the_width(blocks):
    _, csp, partition = blocks
    with pytest.raises(InvalidInputError):
        greedy_schedule(class_conflict_graph(partition, csp), partition, csp, 1)


def test_single_class_is_one_round():
    csp = proper_coloring_csp(cycle(5), 3)
    partition = FinitePartition.single_class(range(5))
    schedule = greedy_schedule(class_conflict_graph(partition, csp), partition, csp, 1)
    assert schedule.rounds == ((0, 1, 2, 3, 4),)
