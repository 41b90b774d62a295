"""
Deterministic LLL solver over a partition of bounded shattering width.

Rounds are processed in schedule order. In each round every constraint
meeting the round's vertex set U is replaced by its thresholded version B*,
the conditionings ψ of dom(B) ∩ U whose conditional violation probability
reaches (e(d+1))^(1-s(B)). The thresholded CSP satisfies the classic LLL
condition and splits into components inside single classes, so it is solved
exactly by brute force. Each constraint then carries one unit less of slack
whenever a round touched it; once all rounds are done every residual
constraint is the always-satisfied empty constraint.
"""
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from lllocal.config import app_cfg
from lllocal.constants import Verdict
from lllocal.csp.algebra import (
    conditional_counts,
    d_param,
    dependency_graph,
    p_param,
    probability,
    restrict,
    restrict_csp,
    violates,
)
from lllocal.csp.brute_force import brute_force_solve
from lllocal.csp.model import CSP, AnyConstraint, Constraint, PartialColoring
from lllocal.exceptions import AuditError, BudgetExceededError, InvalidInputError, PreconditionError
from lllocal.graphs.core import VertexSet, components as graph_components
from lllocal.shattering.partitions import FinitePartition, shattering_width
from lllocal.solvers.certified import compare_with_exp
from lllocal.solvers.conditions import LLLCondition, check_condition
from lllocal.solvers.schedule import class_conflict_graph, greedy_schedule
from lllocal.utils.tracing_utils import span

logger = logging.getLogger(__name__)


def meets_threshold(P: Fraction, d: int, s_B: int) -> bool:
    """P ≥ (e(d+1))^(1-s_B), i.e. P·(d+1)^(s_B-1) ≥ e^(1-s_B)."""
    return compare_with_exp(P * Fraction(d + 1) ** (s_B - 1), 1, 1 - s_B) >= 0


def slack_holds(P: Fraction, d: int, s_B: int) -> bool:
    """P·(d+1)^s_B < e^(-s_B)."""
    return compare_with_exp(P * Fraction(d + 1) ** s_B, 1, -s_B) < 0


def threshold_constraint(B: AnyConstraint, U, s_B: int, d: int, cap: int | None = None) -> Constraint:
    """B*: conditionings of dom(B) ∩ U whose conditional probability reaches the Markov threshold."""
    members = set(U)
    positions = tuple(i for i, v in enumerate(B.domain) if v in members)
    if not positions:
        raise InvalidInputError("Thresholding needs dom(B) to meet U")
    if s_B < 1:
        raise InvalidInputError(f"Thresholding needs s(B) >= 1, got {s_B}")
    limit = app_cfg.ENUMERATION_CAP if cap is None else cap
    if B.q ** len(positions) > limit:
        raise BudgetExceededError(
            f"Thresholding enumerates {B.q}^{len(positions)} conditionings, over the cap of {limit}",
            details={"q": B.q, "width": len(positions), "cap": limit},
        )
    completions = B.q ** (B.arity - len(positions))
    forbidden = frozenset(
        psi
        for psi, count in conditional_counts(B, positions).items()
        if meets_threshold(Fraction(count, completions), d, s_B)
    )
    return Constraint(tuple(B.domain[i] for i in positions), forbidden, B.q)


@dataclass
class StepAudit:
    """What one application of the conditioning step did."""

    d_before: int
    d_after: int
    touched: int
    thresholded_nonempty: int
    threshold_p: Fraction
    threshold_d: int
    components: int
    largest_component: int
    audit: Verdict

    def as_dict(self) -> dict[str, Any]:
        return {
            "d_before": self.d_before,
            "d_after": self.d_after,
            "constraints_touched": self.touched,
            "thresholded_nonempty": self.thresholded_nonempty,
            "threshold_p": str(self.threshold_p),
            "threshold_d": self.threshold_d,
            "components": self.components,
            "largest_component": self.largest_component,
            "audit": self.audit.value,
        }


@dataclass
class StepResult:
    coloring: PartialColoring
    residual: CSP
    audit: StepAudit


def audit_residual(residual: CSP, d: int, remaining: Callable[[int], int]) -> None:
    """Every residual constraint must satisfy P[B/f]·(d+1)^r < e^(-r), with d taken before restriction."""
    for b, B in enumerate(residual.constraints):
        r = remaining(b)
        if not slack_holds(probability(B), d, r):
            raise AuditError(
                f"Residual of constraint {b} lost its slack",
                details={"constraint": b, "p": str(probability(B)), "d": d, "s": r},
            )


def shattering_step(
    csp: CSP,
    U: VertexSet,
    s_fn: Callable[[int], int],
    budget: int,
    check_precondition: bool = True,
) -> StepResult:
    """
    Color U so that every residual constraint keeps its slack.

    `s_fn(b)` gives s(B) for the constraint at index b. Returns f on U, the
    residual CSP 𝓑/f (constraint order preserved) and the audit record.
    """
    members = set(U)
    d = d_param(csp)
    touched = [b for b, B in enumerate(csp.constraints) if any(v in members for v in B.domain)]

    if check_precondition:
        for b in touched:
            P = probability(csp.constraints[b])
            if not slack_holds(P, d, s_fn(b)):
                raise PreconditionError(
                    f"Constraint {b} lacks slack: P={P}, d={d}, s(B)={s_fn(b)}",
                    details={"constraint": b, "p": str(P), "d": d, "s": s_fn(b)},
                )

    thresholded = CSP(
        tuple(v for v in csp.universe if v in members),
        csp.q,
        tuple(threshold_constraint(csp.constraints[b], members, s_fn(b), d) for b in touched),
    )
    p_star, d_star = p_param(thresholded), d_param(thresholded)
    if not LLLCondition.classic().evaluate(p_star, d_star).holds:
        raise AuditError(f"Thresholded CSP violates the classic condition: p*={p_star}, d*={d_star}")

    parts = graph_components(dependency_graph(thresholded), within=thresholded.universe)
    largest = max((len(p) for p in parts), default=0)
    if largest > budget:
        raise BudgetExceededError(
            f"Round component of {largest} variables exceeds the class budget {budget}",
            details={"component_size": largest, "budget": budget},
        )
    f = brute_force_solve(thresholded, budget=budget)
    if f is None:
        raise AuditError("Thresholded CSP has no solution although the classic condition holds")

    residual = restrict_csp(csp, f)
    d_after = d_param(residual)
    if d_after > d:
        raise AuditError(f"Restriction increased d from {d} to {d_after}")
    touched_set = set(touched)
    audit_residual(residual, d, lambda b: s_fn(b) - (1 if b in touched_set else 0))

    audit = StepAudit(
        d_before=d,
        d_after=d_after,
        touched=len(touched),
        thresholded_nonempty=sum(1 for B in thresholded.constraints if B.forbidden),
        threshold_p=p_star,
        threshold_d=d_star,
        components=len(parts),
        largest_component=largest,
        audit=Verdict.HOLDS_STRICTLY,
    )
    return StepResult(coloring=f, residual=residual, audit=audit)


@dataclass
class ShatteringResult:
    coloring: PartialColoring
    rounds: list[dict[str, Any]] = field(default_factory=list)
    precondition: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    def report(self, include_timing: bool = False) -> dict[str, Any]:
        body: dict[str, Any] = {
            "precondition": self.precondition,
            "rounds": self.rounds,
            "round_count": len(self.rounds),
        }
        if include_timing:
            body["wall_time_s"] = round(self.wall_time, 6)
        return body


def shattering_solve(csp: CSP, partition: FinitePartition, s: int, budget: int) -> ShatteringResult:
    """Solve 𝓑 round by round over a partition of shattering width ≤ s with classes of ≤ budget variables."""
    started = time.perf_counter()
    partition.require_cover(csp.universe)
    width = shattering_width(partition, csp)
    if width > s:
        raise PreconditionError(f"Partition has shattering width {width} > s = {s}", details={"width": width, "s": s})
    if partition.largest_class() > budget:
        raise PreconditionError(
            f"Partition class of {partition.largest_class()} variables exceeds budget {budget}",
            details={"largest_class": partition.largest_class(), "budget": budget},
        )
    condition = check_condition(csp, LLLCondition.shatter(s))
    if not condition.holds:
        raise PreconditionError(f"Condition {condition.inequality} fails", details=condition.as_dict())

    schedule = greedy_schedule(class_conflict_graph(partition, csp), partition, csp, s)
    current = csp
    f = PartialColoring(csp.q)
    rounds = []
    for n, U in enumerate(schedule.rounds):
        with span(
            f"shattering-round-{n}", round=n, classes=len(schedule.round_classes[n]), vertices=len(U)
        ) as observation:
            logger.info(f"Round {n}: {len(schedule.round_classes[n])} classes, {len(U)} variables")
            step = shattering_step(current, U, lambda b, n=n: schedule.s_n(n, b), budget, check_precondition=n == 0)
            entry = {
                "round": n,
                "classes": len(schedule.round_classes[n]),
                "vertices": len(U),
                **step.audit.as_dict(),
            }
            observation.update(output=entry)
        rounds.append(entry)
        f = f.union(step.coloring)
        current = step.residual

    if not f.is_total_on(csp.universe):
        raise AuditError("Schedule left variables uncolored")
    for b, B in enumerate(csp.constraints):
        if violates(f, B) or restrict(B, f).forbidden_count():
            raise AuditError(f"Final coloring violates constraint {b}")
    logger.info(f"Shattering solver finished after {len(rounds)} rounds")
    return ShatteringResult(
        coloring=f, rounds=rounds, precondition=condition.as_dict(), wall_time=time.perf_counter() - started
    )
