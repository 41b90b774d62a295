from fractions import Fraction

import pytest

from lllocal.applications.coloring import proper_coloring_csp, verify_vertex_coloring
from lllocal.constants import Verdict
from lllocal.csp.algebra import d_param
from lllocal.csp.model import CSP, Constraint
from lllocal.exceptions import AuditError, InvalidInputError, PreconditionError
from lllocal.graphs.generators import cycle, path
from lllocal.shattering.partitions import FinitePartition
from lllocal.shattering.witnesses import interval_separation, partition_from_separation
from lllocal.solvers.shattering_solver import (
    audit_residual,
    meets_threshold,
    shattering_solve,
    shattering_step,
    slack_holds,
    threshold_constraint,
)

DIAGONAL = frozenset((c, c) for c in range(67))


def test_threshold_and_slack_boundaries():
    assert meets_threshold(Fraction(1), 2, 1)
    assert not meets_threshold(Fraction(1, 2), 2, 1)
    assert meets_threshold(Fraction(1, 8), 2, 2)
    assert not meets_threshold(Fraction(1, 67), 2, 2)
    assert slack_holds(Fraction(1, 67), 2, 2)
    assert not slack_holds(Fraction(1, 66), 2, 2)
    assert slack_holds(Fraction(0), 5, 0)


def test_threshold_constraint_keeps_only_heavy_conditionings():
    B = Constraint((0, 1), DIAGONAL, 67)
    whole = threshold_constraint(B, {0, 1}, 2, 2)
    assert whole.domain == (0, 1)
    assert whole.forbidden == DIAGONAL
    half = threshold_constraint(B, {1, 5}, 2, 2)
    assert half.domain == (1,)
    assert half.forbidden == frozenset()


def test_threshold_constraint_needs_overlap_and_slack():
    B = Constraint((0, 1), DIAGONAL, 67)
    with pytest.raises(InvalidInputError):
        threshold_constraint(B, {7}, 2, 2)
    with pytest.raises(InvalidInputError):
        threshold_constraint(B, {0}, 0, 2)


def test_residual_audit_uses_the_degree_before_restriction():
    residual = CSP((0, 1), 2, (Constraint((0, 1), frozenset({(0, 0)}), 2),))
    assert d_param(residual) == 0
    audit_residual(residual, 0, lambda b: 1)
    with pytest.raises(AuditError) as exc:
        audit_residual(residual, 1, lambda b: 1)
    assert exc.value.details == {"constraint": 0, "p": "1/4", "d": 1, "s": 1}


def test_single_step_colors_the_round_and_keeps_slack():
    csp = proper_coloring_csp(path(8), 67)
    U = (0, 1, 2, 3)
    step = shattering_step(csp, U, lambda b: 2, budget=4)
    assert set(step.coloring) == set(U)
    assert step.residual.universe == (4, 5, 6, 7)
    assert step.audit.audit == Verdict.HOLDS_STRICTLY
    assert step.audit.d_after <= step.audit.d_before
    assert step.audit.as_dict()["constraints_touched"] == 4


@pytest.mark.parametrize("n,L", [(24, 4), (30, 3), (40, 8)])
def test_solves_cycle_coloring_round_by_round(n, L):
    G = cycle(n)
    csp = proper_coloring_csp(G, 67)
    partition = partition_from_separation(G, interval_separation(G, L))
    result = shattering_solve(csp, partition, 2, L)
    assert verify_vertex_coloring(G, result.coloring.as_list(range(n))).ok
    assert len(result.rounds) == 2
    assert all(entry["audit"] == Verdict.HOLDS_STRICTLY.value for entry in result.rounds)
    assert result.precondition["verdict"] == Verdict.HOLDS_STRICTLY.value
    assert "wall_time_s" not in result.report()
    assert result.report(include_timing=True)["round_count"] == 2


def test_rejects_partitions_wider_than_s():
    csp = proper_coloring_csp(path(6), 67)
    with pytest.raises(PreconditionError) as info:
        shattering_solve(csp, FinitePartition.singletons(range(6)), 1, 1)
    assert info.value.details == {"width": 2, "s": 1}


def test_rejects_classes_over_budget():
    csp = proper_coloring_csp(path(6), 67)
    with pytest.raises(PreconditionError):
        shattering_solve(csp, FinitePartition.single_class(range(6)), 1, 3)


def test_rejects_instances_failing_the_condition():
    G = cycle(12)
    csp = proper_coloring_csp(G, 9)
    partition = partition_from_separation(G, interval_separation(G, 3))
    with pytest.raises(PreconditionError) as info:
        shattering_solve(csp, partition, 2, 3)
    assert info.value.details["verdict"] == Verdict.FAILS.value
