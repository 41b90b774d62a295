"""
Executing LOCAL algorithms on structured graphs and measuring success against
an LCL. Every output at v is the algorithm applied to the T-ball around v.
"""
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from scipy.stats import binomtest

from lllocal.config import app_cfg
from lllocal.exceptions import BudgetExceededError, InvalidInputError
from lllocal.graphs.core import Graph
from lllocal.local.problems import LCLProblem, LocalAlgorithm
from lllocal.local.structured import BallTemplate, Labeling, StructuredGraph, ball_template
from lllocal.utils.concurrency import ordered_map
from lllocal.utils.seeding import child_rng
from lllocal.utils.tracing_utils import span

logger = logging.getLogger(__name__)

PERMUTATION_SWEEP_CAP = 8


def ball_templates(sg: StructuredGraph, R: int, max_workers: int | None = None) -> list[BallTemplate]:
    if R < 0:
        raise InvalidInputError(f"Radius must be non-negative, got {R}")
    return ordered_map(lambda v: ball_template(sg, v, R), range(sg.n), max_workers)


def _check_labeling(sg: StructuredGraph, labeling: Labeling) -> None:
    if len(labeling) != sg.n:
        raise InvalidInputError(f"Labeling has {len(labeling)} entries for {sg.n} vertices")
    if any(labeling[v] < 0 for v in range(sg.n)):
        raise InvalidInputError("Labels must be non-negative")


def run_local(
    algorithm: LocalAlgorithm,
    G: Graph | StructuredGraph,
    labeling: Labeling,
    T: int,
    templates: Sequence[BallTemplate] | None = None,
    max_workers: int | None = None,
) -> list[int]:
    """Output labeling v -> algorithm([G, labeling, v]_T)."""
    sg = StructuredGraph.coerce(G)
    _check_labeling(sg, labeling)
    views = ball_templates(sg, T, max_workers) if templates is None else templates
    return ordered_map(lambda template: algorithm(template.with_labels(labeling)), views, max_workers)


@dataclass
class LCLCheck:
    ok: bool
    violations: list[int] = field(default_factory=list)

    def as_dict(self) -> dict[str, Any]:
        return {"ok": self.ok, "violations": self.violations}


def check_lcl(
    problem: LCLProblem,
    G: Graph | StructuredGraph,
    labeling: Labeling,
    templates: Sequence[BallTemplate] | None = None,
    max_workers: int | None = None,
) -> LCLCheck:
    sg = StructuredGraph.coerce(G)
    _check_labeling(sg, labeling)
    views = ball_templates(sg, problem.radius, max_workers) if templates is None else templates
    verdicts = ordered_map(lambda template: problem(template.with_labels(labeling)), views, max_workers)
    violations = [v for v, accepted in enumerate(verdicts) if not accepted]
    return LCLCheck(not violations, violations)


def run_deterministic(
    algorithm: LocalAlgorithm, G: Graph | StructuredGraph, ids: Sequence[int], T: int
) -> list[int]:
    sg = StructuredGraph.coerce(G)
    if sorted(ids) != list(range(sg.n)):
        raise InvalidInputError("Identifier assignment must be a bijection onto 0..n-1")
    return run_local(algorithm, sg, ids, T)


def deterministic_success(
    problem: LCLProblem, algorithm: LocalAlgorithm, G: Graph | StructuredGraph, ids: Sequence[int], T: int
) -> bool:
    sg = StructuredGraph.coerce(G)
    return check_lcl(problem, sg, run_deterministic(algorithm, sg, ids, T)).ok


@dataclass
class SweepResult:
    ok: bool
    checked: int
    counterexample: list[int] | None = None


def permutation_sweep(
    problem: LCLProblem, algorithm: LocalAlgorithm, G: Graph | StructuredGraph, T: int
) -> SweepResult:
    """Run under every identifier assignment; stop at the first failing one."""
    sg = StructuredGraph.coerce(G)
    if sg.n > PERMUTATION_SWEEP_CAP:
        raise BudgetExceededError(
            f"Permutation sweep over {sg.n}! assignments exceeds the cap of {PERMUTATION_SWEEP_CAP} vertices"
        )
    algo_views = ball_templates(sg, T)
    check_views = ball_templates(sg, problem.radius)
    checked = 0
    for ids in itertools.permutations(range(sg.n)):
        checked += 1
        output = run_local(algorithm, sg, ids, T, algo_views)
        if not check_lcl(problem, sg, output, check_views).ok:
            logger.info(f"Identifier assignment {list(ids)} breaks {algorithm.name} for {problem.name}")
            return SweepResult(False, checked, list(ids))
    return SweepResult(True, checked)


@dataclass
class RandomizedReport:
    algorithm: str
    problem: str
    label_range: int
    rounds: int
    trials: int
    successes: int
    seed: int
    ci_low: float
    ci_high: float
    threshold: float

    @property
    def rate(self) -> float:
        return self.successes / self.trials

    @property
    def meets_threshold(self) -> bool:
        return self.rate >= self.threshold

    def as_dict(self) -> dict[str, Any]:
        return {
            "algorithm": self.algorithm,
            "problem": self.problem,
            "label_range": self.label_range,
            "rounds": self.rounds,
            "trials": self.trials,
            "successes": self.successes,
            "rate": self.rate,
            "ci95": [self.ci_low, self.ci_high],
            "threshold": self.threshold,
            "meets_threshold": self.meets_threshold,
            "seed": self.seed,
        }


def run_randomized(
    problem: LCLProblem,
    algorithm: LocalAlgorithm,
    G: Graph | StructuredGraph,
    ell: int,
    T: int,
    trials: int | None = None,
    seed: int | None = None,
    max_workers: int | None = None,
) -> RandomizedReport:
    """
    Empirical success rate under i.i.d. uniform labels from range(ell).

    Trial i draws its labels from the child seed (seed, "run_randomized", i),
    so the rate does not depend on the worker count. The threshold 1 - 1/n is
    reported, not enforced.
    """
    sg = StructuredGraph.coerce(G)
    trials = app_cfg.DEFAULT_TRIALS if trials is None else trials
    seed = app_cfg.DEFAULT_SEED if seed is None else seed
    if ell < 1 or trials < 1:
        raise InvalidInputError(f"Need ell >= 1 and trials >= 1, got ell={ell}, trials={trials}")

    algo_views = ball_templates(sg, T, max_workers)
    check_views = ball_templates(sg, problem.radius, max_workers)

    def trial(index: int) -> bool:
        rng = child_rng(seed, "run_randomized", index)
        theta = [rng.randrange(ell) for _ in range(sg.n)]
        output = run_local(algorithm, sg, theta, T, algo_views, max_workers=1)
        return check_lcl(problem, sg, output, check_views, max_workers=1).ok

    with span("run-randomized", algorithm=algorithm.name, ell=ell, trials=trials) as observation:
        successes = sum(ordered_map(trial, range(trials), max_workers))
        interval = binomtest(successes, trials).proportion_ci(confidence_level=0.95)
        report = RandomizedReport(
            algorithm=algorithm.name,
            problem=problem.name,
            label_range=ell,
            rounds=T,
            trials=trials,
            successes=successes,
            seed=seed,
            ci_low=float(interval.low),
            ci_high=float(interval.high),
            threshold=success_threshold(sg.n),
        )
        observation.update(output=report.as_dict())
    logger.info(f"{algorithm.name} solved {problem.name} in {successes}/{trials} trials (ell={ell}, T={T})")
    return report


def exact_success_probability(
    problem: LCLProblem,
    algorithm: LocalAlgorithm,
    G: Graph | StructuredGraph,
    ell: int,
    T: int,
    cap: int | None = None,
) -> Fraction:
    """Success probability over all ell^n label assignments, exactly."""
    sg = StructuredGraph.coerce(G)
    limit = app_cfg.EXACT_ENUMERATION_CAP if cap is None else cap
    outcomes = ell**sg.n
    if outcomes > limit:
        raise BudgetExceededError(
            f"{ell}^{sg.n} label assignments exceed the enumeration cap of {limit}",
            details={"outcomes": outcomes, "cap": limit},
        )
    algo_views = ball_templates(sg, T)
    check_views = ball_templates(sg, problem.radius)
    successes = sum(
        check_lcl(problem, sg, run_local(algorithm, sg, theta, T, algo_views, 1), check_views, 1).ok
        for theta in itertools.product(range(ell), repeat=sg.n)
    )
    return Fraction(successes, outcomes)


def success_threshold(n: int) -> float:
    """Randomized-complexity success threshold 1 - 1/n."""
    return 1 - 1 / n if n else 1.0
