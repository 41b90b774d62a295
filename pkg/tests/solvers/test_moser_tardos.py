from lllocal.applications.coloring import proper_coloring_csp
from lllocal.applications.sinkless import sinkless_orientation_csp
from lllocal.csp.algebra import solution_violations
from lllocal.csp.model import CSP, Constraint
from lllocal.graphs.generators import cycle, random_regular
from lllocal.solvers.moser_tardos import moser_tardos


def test_solves_cycle_coloring_reproducibly():
    csp = proper_coloring_csp(cycle(30), 3)
    first = moser_tardos(csp, 11)
    assert first.solved
    assert solution_violations(csp, first.coloring) == []
    again = moser_tardos(csp, 11)
    assert again.coloring == first.coloring
    assert again.resamples == first.resamples


def test_solves_sinkless_orientation_on_dense_regular_graphs():
    csp = sinkless_orientation_csp(random_regular(40, 5, seed=2))
    result = moser_tardos(csp, 3)
    assert result.solved
    assert result.as_dict()["violated_at_end"] == 0


def test_gives_up_on_unsatisfiable_instances():
    result = moser_tardos(proper_coloring_csp(cycle(5), 2), 0, max_resamples=200)
    assert not result.solved
    assert result.resamples == 200
    assert result.violated_at_end > 0


def test_always_violated_constraint_is_hopeless():
    result = moser_tardos(CSP.over_range(2, 2, [Constraint.always_violated(2)]), 0)
    assert not result.solved
    assert result.resamples == 0
