"""
Independent complete sections: one vertex per component of G₂, pairwise
non-adjacent in G₁, found by solving a CSP with one constraint per chosen
k-subset F.

Under a coloring φ with Δ colors, v is selected when φ(v) = 0 and no neighbor
has color 0. The constraint B_F on B(F, 1) forbids every φ that selects no
vertex of F.
"""
import itertools
import logging
import statistics
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from lllocal.config import app_cfg
from lllocal.constants import SolverKind
from lllocal.csp.algebra import d_param, p_param
from lllocal.csp.brute_force import brute_force_solve
from lllocal.csp.model import CSP, AnyConstraint, Constraint, LazyConstraint, PartialColoring
from lllocal.exceptions import AuditError, BudgetExceededError, InvalidInputError
from lllocal.graphs.core import Graph, VertexSet, components, is_independent, max_degree
from lllocal.solvers.certified import approximate_rational
from lllocal.solvers.moser_tardos import moser_tardos
from lllocal.utils.seeding import child_rng, child_seed

logger = logging.getLogger(__name__)


def grown_subset(G: Graph, component: VertexSet, k: int) -> VertexSet:
    """First k vertices of a BFS inside the component, started at its least vertex."""
    members = set(component)
    order = [component[0]]
    seen = {component[0]}
    queue = deque(order)
    while queue and len(order) < k:
        x = queue.popleft()
        for y in G.neighbors(x):
            if y in members and y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return tuple(sorted(order[:k]))


def without_inner_edges(G: Graph, families: Sequence[VertexSet]) -> Graph:
    owner = {v: i for i, F in enumerate(families) for v in F}
    kept = [(u, v) for u, v in G.edges if not (u in owner and owner.get(v) == owner[u])]
    return Graph.from_edges(G.n, kept)


def closed_neighborhood(G: Graph, F: VertexSet) -> VertexSet:
    return tuple(sorted(set(F).union(u for v in F for u in G.neighbors(v))))


def selected(G: Graph, f, candidates) -> list[int]:
    """S_f restricted to the candidates: color 0 with no neighbor of color 0."""
    return [v for v in candidates if f[v] == 0 and all(f[u] != 0 for u in G.neighbors(v))]


def b_f_constraint(G: Graph, F: VertexSet, delta: int, cap: int | None = None) -> AnyConstraint:
    limit = app_cfg.ENUMERATION_CAP if cap is None else cap
    domain = closed_neighborhood(G, F)

    def fails(values) -> bool:
        f = dict(zip(domain, values))
        return not selected(G, f, F)

    if delta ** len(domain) <= limit:
        return Constraint.from_predicate(domain, delta, fails, limit)
    return LazyConstraint(domain, delta, fails)


def b_f_dependency_bound(k: int, delta: int) -> int:
    """(k + Δk)(1 + Δ) - 1: constraints meeting a given B_F when every F has k vertices."""
    return (k + delta * k) * (1 + delta) - 1


@dataclass
class SectionResult:
    section: VertexSet | None
    families: list[VertexSet]
    report: dict[str, Any] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.section is not None


def independent_complete_section(
    G1: Graph,
    G2: Graph,
    k: int,
    delta: int,
    solver: SolverKind = SolverKind.MOSER_TARDOS,
    seed: int | None = None,
    budget: int | None = None,
) -> SectionResult:
    """
    A set meeting every G₂-component in exactly one chosen vertex and
    independent in G₁, or `section=None` with diagnostics when the solver
    fails (the guarantee needs k far larger than desk-scale runs use).
    """
    seed = app_cfg.DEFAULT_SEED if seed is None else seed
    if G1.n != G2.n:
        raise InvalidInputError(f"Graphs have {G1.n} and {G2.n} vertices")
    if delta < 2:
        raise InvalidInputError(f"Δ must be at least 2, got {delta}")
    if max_degree(G1) > delta:
        raise InvalidInputError(f"G1 has maximum degree {max_degree(G1)} > Δ = {delta}")
    parts = components(G2)
    small = [c for c in parts if len(c) < k]
    if small:
        raise InvalidInputError(
            f"{len(small)} components of G2 have fewer than k = {k} vertices",
            details={"smallest": len(min(small, key=len)), "k": k},
        )

    families = [grown_subset(G2, c, k) for c in parts]
    reduced = without_inner_edges(G1, families)
    csp = CSP.over_range(G1.n, delta, [b_f_constraint(reduced, F, delta) for F in families])
    report: dict[str, Any] = {
        "families": len(families),
        "k": k,
        "delta": delta,
        "solver": solver.value,
        "seed": seed,
        "d": d_param(csp),
        "d_bound": b_f_dependency_bound(k, delta),
    }
    if not any(B.lazy for B in csp.constraints):
        report["p"] = approximate_rational(p_param(csp))

    f = _solve(csp, solver, seed, budget, report)
    if f is None:
        logger.warning(f"No independent complete section found for {len(families)} families (k={k}, Δ={delta})")
        return SectionResult(None, families, report)

    chosen = []
    for F in families:
        hits = selected(reduced, f, F)
        if not hits:
            raise AuditError(f"Solution selects no vertex of the family starting at {F[0]}")
        chosen.append(min(hits))
    section = tuple(sorted(chosen))
    if not is_independent(reduced, section) or not is_independent(G1, section):
        raise AuditError("Selected section is not independent")
    if any(not set(section).intersection(c) for c in parts):
        raise AuditError("Selected section misses a component of G2")
    report["size"] = len(section)
    logger.info(f"Independent complete section of {len(section)} vertices over {len(parts)} components")
    return SectionResult(section, families, report)


def _solve(csp: CSP, solver: SolverKind, seed: int, budget: int | None, report: dict[str, Any]) -> PartialColoring | None:
    if solver == SolverKind.MOSER_TARDOS:
        result = moser_tardos(csp, child_seed(seed, "independent_complete_section"))
        report["moser_tardos"] = result.as_dict()
        if result.solved:
            return result.coloring
        logger.info("Moser-Tardos failed; falling back to brute force")
    elif solver != SolverKind.BRUTE:
        raise InvalidInputError(f"Solver {solver.value} is not available for complete sections")
    try:
        return brute_force_solve(csp, budget)
    except BudgetExceededError as e:
        report["brute_force"] = str(e)
        return None


@dataclass
class FStarStats:
    trials: int
    mean: float
    std: float
    minimum: int
    maximum: int
    below_k8: float
    expected_lower: Fraction

    def as_dict(self) -> dict[str, Any]:
        return {
            "trials": self.trials,
            "mean": self.mean,
            "std": self.std,
            "min": self.minimum,
            "max": self.maximum,
            "P[|F*| < k/8]": self.below_k8,
            "k(1-1/Δ)^Δ": approximate_rational(self.expected_lower),
        }


def _f_star_setup(G: Graph, F: VertexSet) -> tuple[list[int], list[tuple[int, ...]]]:
    if not is_independent(G, F):
        raise InvalidInputError("F must be independent")
    neighborhood = sorted({u for v in F for u in G.neighbors(v)})
    return neighborhood, [G.neighbors(v) for v in F]


def _f_star_size(psi: dict[int, int], around: list[tuple[int, ...]]) -> int:
    return sum(1 for neighbors in around if all(psi[u] != 0 for u in neighbors))


def estimate_F_star(G: Graph, F: VertexSet, delta: int, trials: int, seed: int) -> FStarStats:
    """Monte-Carlo statistics of |F*| = #{v ∈ F : ψ(u) ≠ 0 for every neighbor u} under uniform ψ."""
    neighborhood, around = _f_star_setup(G, F)
    rng = child_rng(seed, "estimate_F_star")
    sizes = []
    for _ in range(trials):
        psi = {u: rng.randrange(delta) for u in neighborhood}
        sizes.append(_f_star_size(psi, around))
    k = len(F)
    return FStarStats(
        trials=trials,
        mean=statistics.fmean(sizes),
        std=statistics.stdev(sizes) if trials > 1 else 0.0,
        minimum=min(sizes),
        maximum=max(sizes),
        below_k8=sum(1 for size in sizes if size < k / 8) / trials,
        expected_lower=k * Fraction(delta - 1, delta) ** delta,
    )


def f_star_distribution(G: Graph, F: VertexSet, delta: int, cap: int | None = None) -> dict[int, Fraction]:
    """Exact law of |F*| by enumerating all Δ^|N(F)| colorings of the neighborhood."""
    limit = app_cfg.EXACT_ENUMERATION_CAP if cap is None else cap
    neighborhood, around = _f_star_setup(G, F)
    outcomes = delta ** len(neighborhood)
    if outcomes > limit:
        raise BudgetExceededError(
            f"{delta}^{len(neighborhood)} neighborhood colorings exceed the cap of {limit}",
            details={"outcomes": outcomes, "cap": limit},
        )
    counts: Counter[int] = Counter()
    for values in itertools.product(range(delta), repeat=len(neighborhood)):
        counts[_f_star_size(dict(zip(neighborhood, values)), around)] += 1
    return {size: Fraction(count, outcomes) for size, count in sorted(counts.items())}


def exact_b_f_probability(G: Graph, F: VertexSet, delta: int, cap: int | None = None) -> Fraction:
    """P[B_F] = E_ψ[(1 - 1/Δ)^|F*|]."""
    keep = Fraction(delta - 1, delta)
    return sum(
        (weight * keep**size for size, weight in f_star_distribution(G, F, delta, cap).items()),
        Fraction(0),
    )
