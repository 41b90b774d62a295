"""
Reduction from an LCL plus a randomized LOCAL algorithm to a CSP over the
random labels.

The constraint at v lives on B(v, R*) with R* = T + R and forbids exactly the
label assignments under which the verifier rejects v. Outputs inside B(v, R)
only read B(u, T) ⊆ B(v, R*), so the constraint is well defined. Vertices with
isomorphic unlabeled R*-balls share one constraint template, transported along
canonical orderings.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from lllocal.config import app_cfg
from lllocal.csp.algebra import d_param, dependency_graph, p_param
from lllocal.csp.model import CSP, AnyConstraint, Assignment, Constraint, LazyConstraint
from lllocal.exceptions import BudgetExceededError, InvalidInputError
from lllocal.graphs.core import Graph, ball, power_graph
from lllocal.local.canonical import canonical_order
from lllocal.local.problems import LCLProblem, LocalAlgorithm
from lllocal.local.runner import ball_templates, check_lcl, run_local
from lllocal.local.structured import BallTemplate, RootedBall, StructuredGraph
from lllocal.solvers.certified import approximate_rational, compare_with_exp
from lllocal.solvers.moser_tardos import moser_tardos
from lllocal.utils.concurrency import ordered_map
from lllocal.utils.seeding import child_rng, child_seed

logger = logging.getLogger(__name__)

SOLUTION_SEARCH_RUNS = 10


@dataclass
class ReductionOutput:
    csp: CSP
    radius_star: int
    rounds: int
    label_range: int
    problem: LCLProblem
    algorithm: LocalAlgorithm
    graph: StructuredGraph
    template_classes: int = 0
    lazy_constraints: int = 0
    _views: Sequence[BallTemplate] = field(default_factory=list, repr=False)

    def decode(self, theta: Sequence[int]) -> list[int]:
        """θ ↦ 𝒜_T(𝐆, θ)."""
        return run_local(self.algorithm, self.graph, theta, self.rounds, self._views or None)

    def violated_vertices(self, theta: Sequence[int]) -> list[int]:
        return [v for v, B in enumerate(self.csp.constraints) if B.contains(tuple(theta[x] for x in B.domain))]


def _failure_predicate(
    problem: LCLProblem,
    algorithm: LocalAlgorithm,
    domain: tuple[int, ...],
    algo_views: Sequence[BallTemplate],
    check_view: BallTemplate,
):
    def fails(values: Assignment) -> bool:
        theta = dict(zip(domain, values))
        outputs = {u: algorithm(algo_views[u].with_labels(theta)) for u in check_view.original_ids}
        return not problem(check_view.with_labels(outputs))

    return fails


def _unlabeled(template: BallTemplate) -> RootedBall:
    size = template.graph.n
    return RootedBall(template.graph, 0, (0,) * size, template.sigma, template.radius, template.distances)


def _transport(forbidden, source_order: Sequence[int], target_order: Sequence[int]) -> frozenset:
    """Re-index tuples along the canonical positions shared by two isomorphic balls."""
    moved = set()
    for t in forbidden:
        image = [0] * len(t)
        for i, j in zip(source_order, target_order):
            image[j] = t[i]
        moved.add(tuple(image))
    return frozenset(moved)


def lcl_to_csp(
    problem: LCLProblem,
    algorithm: LocalAlgorithm,
    T: int,
    ell: int,
    G: Graph | StructuredGraph,
    cap: int | None = None,
    lazy_fallback: bool = True,
    max_workers: int | None = None,
) -> ReductionOutput:
    sg = StructuredGraph.coerce(G)
    if ell < 1:
        raise InvalidInputError(f"Label range must be positive, got {ell}")
    if T < 0:
        raise InvalidInputError(f"Round count must be non-negative, got {T}")
    limit = app_cfg.ENUMERATION_CAP if cap is None else cap
    radius_star = T + problem.radius

    algo_views = ball_templates(sg, T, max_workers)
    check_views = ball_templates(sg, problem.radius, max_workers)
    star_views = ball_templates(sg, radius_star, max_workers)

    def predicate_at(v: int):
        domain = star_views[v].original_ids
        return domain, _failure_predicate(problem, algorithm, domain, algo_views, check_views[v])

    def key_of(v: int):
        template = star_views[v]
        if template.graph.n > app_cfg.CANONICAL_FORM_CAP or ell ** template.graph.n > limit:
            return None, None
        return canonical_order(_unlabeled(template))

    keyed = ordered_map(key_of, range(sg.n), max_workers)
    representatives: dict[bytes, int] = {}
    for v, (key, _) in enumerate(keyed):
        if key is not None:
            representatives.setdefault(key, v)

    def build_representative(v: int) -> Constraint:
        domain, fails = predicate_at(v)
        return Constraint.from_predicate(domain, ell, fails, limit)

    sources = list(representatives.values())
    built = dict(zip(sources, ordered_map(build_representative, sources, max_workers)))

    def constraint_at(v: int) -> AnyConstraint:
        key, order = keyed[v]
        if key is not None:
            source = representatives[key]
            if source == v:
                return built[v]
            forbidden = _transport(built[source].forbidden, keyed[source][1], order)
            return Constraint(star_views[v].original_ids, forbidden, ell)
        domain, fails = predicate_at(v)
        if ell ** len(domain) <= limit:
            return Constraint.from_predicate(domain, ell, fails, limit)
        if not lazy_fallback:
            raise BudgetExceededError(
                f"Constraint at vertex {v} needs {ell}^{len(domain)} assignments, over the cap of {limit}",
                details={"vertex": v, "ball_size": len(domain), "label_range": ell, "cap": limit},
            )
        return LazyConstraint(domain, ell, fails)

    constraints = ordered_map(constraint_at, range(sg.n), max_workers)
    lazy = sum(1 for B in constraints if B.lazy)
    logger.info(
        f"Reduced {problem.name} under {algorithm.name} (T={T}, ell={ell}) to {len(constraints)} constraints "
        f"on {radius_star}-balls; {len(representatives)} ball shapes, {lazy} lazy"
    )
    return ReductionOutput(
        csp=CSP.over_range(sg.n, ell, constraints),
        radius_star=radius_star,
        rounds=T,
        label_range=ell,
        problem=problem,
        algorithm=algorithm,
        graph=sg,
        template_classes=len(representatives),
        lazy_constraints=lazy,
        _views=algo_views,
    )


def locality_n_bound(G: Graph | StructuredGraph, radius_star: int) -> int:
    """Smallest n with |B(v, R*)| ≤ n for every v."""
    graph = StructuredGraph.coerce(G).graph
    return max((len(ball(graph, v, radius_star)) for v in graph.vertices()), default=0)


def ball_size_histogram(G: Graph, radius: int) -> dict[int, int]:
    return dict(sorted(Counter(len(ball(G, v, radius)) for v in G.vertices()).items()))


@dataclass
class BallSizeReport:
    radius: int
    n: int
    s: int
    max_ball: int
    holds: bool
    polynomial_holds: bool
    histogram: dict[int, int]

    def as_dict(self) -> dict[str, Any]:
        return {
            "radius": self.radius,
            "n": self.n,
            "s": self.s,
            "max_ball": self.max_ball,
            "bound": f"|B(v,{self.radius})| <= n^(1/{self.s + 1})/e",
            "holds": self.holds,
            "polynomial_bound": f"|B(v,{self.radius})| <= n^(1/8)/4",
            "polynomial_holds": self.polynomial_holds,
            "histogram": {str(size): count for size, count in self.histogram.items()},
        }


def ball_size_hypothesis(G: Graph | StructuredGraph, radius_star: int, n: int, s: int) -> BallSizeReport:
    """
    |B(v, 2R*)| ≤ n^{1/(s+1)}/e for every v, decided exactly as
    (|B|·e)^{s+1} ≤ n, plus the polynomial variant (4|B|)^8 ≤ n.
    """
    graph = StructuredGraph.coerce(G).graph
    histogram = ball_size_histogram(graph, 2 * radius_star)
    largest = max(histogram, default=0)
    holds = compare_with_exp(n, largest ** (s + 1), s + 1) >= 0
    return BallSizeReport(2 * radius_star, n, s, largest, holds, (4 * largest) ** 8 <= n, histogram)


@dataclass
class ReductionAudit:
    domains_are_balls: bool
    d: int
    d_bound: int
    dependency_in_power: bool
    p: Fraction | None
    inverse_n: Fraction
    samples: int = 0
    exhaustive: bool = False
    agreement_failures: int = 0
    solutions_checked: int = 0
    solution_failures: int = 0
    first_failure: list[int] | None = None

    @property
    def ok(self) -> bool:
        return (
            self.domains_are_balls
            and self.d <= self.d_bound
            and self.dependency_in_power
            and self.agreement_failures == 0
            and self.solution_failures == 0
        )

    def as_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "domains_are_balls": self.domains_are_balls,
            "d": self.d,
            "d_bound": self.d_bound,
            "dependency_in_power_graph": self.dependency_in_power,
            "p": None if self.p is None else str(self.p),
            "p_value": None if self.p is None else approximate_rational(self.p),
            "p_at_most_inverse_n": None if self.p is None else self.p <= self.inverse_n,
            "samples": self.samples,
            "exhaustive": self.exhaustive,
            "agreement_failures": self.agreement_failures,
            "solutions_checked": self.solutions_checked,
            "solution_failures": self.solution_failures,
            "first_failure": self.first_failure,
        }


def structural_audit(out: ReductionOutput) -> ReductionAudit:
    """Domains are the R*-balls, d ≤ max |B(v, 2R*)| - 1 and G_𝓑 ⊆ G^{2R*}."""
    graph = out.graph.graph
    csp = out.csp
    domains_ok = all(
        set(B.domain) == set(ball(graph, v, out.radius_star)) for v, B in enumerate(csp.constraints)
    )
    d_bound = max((len(ball(graph, v, 2 * out.radius_star)) for v in graph.vertices()), default=1) - 1
    dependency = dependency_graph(csp)
    if out.radius_star == 0:
        inside = dependency.m == 0
    else:
        power = power_graph(graph, 2 * out.radius_star)
        inside = all(power.has_edge(u, v) for u, v in dependency.edges)
    p = None if any(B.lazy for B in csp.constraints) else p_param(csp)
    return ReductionAudit(
        domains_are_balls=domains_ok,
        d=d_param(csp),
        d_bound=d_bound,
        dependency_in_power=inside,
        p=p,
        inverse_n=Fraction(1, max(graph.n, 1)),
    )


def verify_reduction(out: ReductionOutput, samples: int = 100, seed: int | None = None) -> ReductionAudit:
    """
    Structural checks plus agreement between violated constraints and rejected
    vertices. Label assignments are enumerated when ℓ^n is small, otherwise
    sampled; Moser-Tardos runs supply extra solutions to decode.
    """
    seed = app_cfg.DEFAULT_SEED if seed is None else seed
    audit = structural_audit(out)
    n, ell = out.graph.n, out.label_range
    check_views = ball_templates(out.graph, out.problem.radius)

    def inspect(theta: Sequence[int]) -> None:
        violated = out.violated_vertices(theta)
        rejected = check_lcl(out.problem, out.graph, out.decode(theta), check_views).violations
        audit.samples += 1
        if violated != rejected:
            audit.agreement_failures += 1
            audit.first_failure = audit.first_failure or list(theta)
        if not violated:
            audit.solutions_checked += 1
            if rejected:
                audit.solution_failures += 1
                audit.first_failure = audit.first_failure or list(theta)

    if ell**n <= app_cfg.EXACT_ENUMERATION_CAP:
        audit.exhaustive = True
        for index in range(ell**n):
            theta = []
            for _ in range(n):
                index, digit = divmod(index, ell)
                theta.append(digit)
            inspect(theta)
    else:
        for i in range(samples):
            rng = child_rng(seed, "verify_reduction", i)
            inspect([rng.randrange(ell) for _ in range(n)])
        for i in range(min(samples, SOLUTION_SEARCH_RUNS)):
            result = moser_tardos(out.csp, child_seed(seed, "verify_reduction.solve", i))
            if result.solved:
                inspect(result.coloring.as_list(range(n)))

    level = logging.INFO if audit.ok else logging.WARNING
    logger.log(level, f"Reduction audit over {audit.samples} label assignments: ok={audit.ok}")
    return audit
