"""
Probabilities, restriction and conditioning of constraints.

All probabilities are exact `Fraction`s. Restriction B/f keeps the variables
of dom(B) outside dom(f); when nothing is left the result is one of the two
empty-domain constraints, {()} (always violated) or ∅ (always satisfied).
"""
import itertools
import logging
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping

from lllocal.config import app_cfg
from lllocal.csp.model import CSP, AnyConstraint, Assignment, Constraint, LazyConstraint, PartialColoring
from lllocal.exceptions import AuditError, InvalidInputError
from lllocal.graphs.core import Graph

logger = logging.getLogger(__name__)


def assignment_of(B: AnyConstraint, f: Mapping[int, int]) -> Assignment:
    """The tuple f|dom(B) in domain order; f must be total on dom(B)."""
    missing = [v for v in B.domain if v not in f]
    if missing:
        raise InvalidInputError(f"Coloring is not defined on {missing} of the constraint domain")
    return tuple(f[v] for v in B.domain)


def violates(f: Mapping[int, int], B: AnyConstraint) -> bool:
    return B.contains(assignment_of(B, f))


def probability(B: AnyConstraint) -> Fraction:
    """P[B] = |B| / q^|dom(B)|."""
    return Fraction(B.forbidden_count(), B.q ** B.arity)


def normalize(B: AnyConstraint) -> Constraint:
    return B.normalized()


def _split(B: AnyConstraint, f: Mapping[int, int]) -> tuple[list[int], list[int]]:
    fixed = [i for i, v in enumerate(B.domain) if v in f]
    free = [i for i, v in enumerate(B.domain) if v not in f]
    return fixed, free


def restrict(B: AnyConstraint, f: Mapping[int, int]) -> AnyConstraint:
    """B/f: forbidden completions of f on the variables of dom(B) that f leaves unassigned."""
    fixed, free = _split(B, f)
    if not fixed:
        return B
    pinned = {i: f[B.domain[i]] for i in fixed}
    residual_domain = tuple(B.domain[i] for i in free)

    if isinstance(B, LazyConstraint):
        def merged(values: Assignment) -> tuple[int, ...]:
            full = [0] * B.arity
            for i, c in pinned.items():
                full[i] = c
            for i, c in zip(free, values):
                full[i] = c
            return tuple(full)

        if B.q ** len(free) > app_cfg.ENUMERATION_CAP:
            return LazyConstraint(residual_domain, B.q, lambda values: B.contains(merged(values)))
        forbidden = frozenset(
            values for values in itertools.product(range(B.q), repeat=len(free)) if B.contains(merged(values))
        )
        return Constraint(residual_domain, forbidden, B.q)

    forbidden = frozenset(
        tuple(t[i] for i in free) for t in B.forbidden if all(t[i] == c for i, c in pinned.items())
    )
    return Constraint(residual_domain, forbidden, B.q)


def restrict_csp(csp: CSP, f: Mapping[int, int]) -> CSP:
    """𝓑/f over the universe X \\ dom(f); constraint order is preserved."""
    universe = tuple(v for v in csp.universe if v not in f)
    return CSP(universe, csp.q, tuple(restrict(B, f) for B in csp.constraints))


def conditional_probability(B: AnyConstraint, psi: Mapping[int, int], U: Iterable[int]) -> Fraction:
    """P[B | psi] for psi total exactly on dom(B) ∩ U."""
    members = set(U)
    expected = {v for v in B.domain if v in members}
    if set(psi) != expected:
        raise InvalidInputError(
            f"Conditioning must be defined exactly on dom(B) ∩ U = {sorted(expected)}, got {sorted(psi)}"
        )
    return probability(restrict(B, psi))


def conditional_counts(B: AnyConstraint, positions: tuple[int, ...]) -> dict[Assignment, int]:
    """
    Forbidden-tuple counts grouped by their projection onto `positions`.

    Conditionings absent from the result have conditional probability zero.
    """
    counts: dict[Assignment, int] = defaultdict(int)
    for t in B.iter_forbidden():
        counts[tuple(t[i] for i in positions)] += 1
    return dict(counts)


def p_param(csp: CSP) -> Fraction:
    return max((probability(B) for B in csp.constraints), default=Fraction(0))


def overlap_lists(csp: CSP) -> list[set[int]]:
    """For each constraint index, the indices of the other constraints sharing a variable with it."""
    by_variable: dict[int, list[int]] = defaultdict(list)
    for i, B in enumerate(csp.constraints):
        for v in B.domain:
            by_variable[v].append(i)
    overlaps = []
    for i, B in enumerate(csp.constraints):
        others = set()
        for v in B.domain:
            others.update(by_variable[v])
        others.discard(i)
        overlaps.append(others)
    return overlaps


def d_param(csp: CSP) -> int:
    """Maximum number of other constraints (counted with multiplicity) sharing a variable."""
    return max((len(others) for others in overlap_lists(csp)), default=0)


def dependency_graph(csp: CSP) -> Graph:
    """
    G_𝓑: variables adjacent iff they share a constraint domain.

    Vertex ids are the variable ids, so the graph has max(universe) + 1 vertices.
    """
    n = (max(csp.universe) + 1) if csp.universe else 0
    edges = set()
    for B in csp.constraints:
        for x, y in itertools.combinations(sorted(B.domain), 2):
            edges.add((x, y))
    return Graph.from_edges(n, edges)


def check_restriction_monotone(before: CSP, after: CSP) -> None:
    """Post-hoc audit d(𝓑/f) ≤ d(𝓑)."""
    d_before, d_after = d_param(before), d_param(after)
    if d_after > d_before:
        raise AuditError(f"Restriction increased d from {d_before} to {d_after}")


def solution_violations(csp: CSP, f: PartialColoring) -> list[int]:
    """Indices of the constraints violated by a coloring total on the universe."""
    return [i for i, B in enumerate(csp.constraints) if violates(f, B)]
