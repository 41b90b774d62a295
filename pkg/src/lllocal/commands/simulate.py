import logging

from lllocal.commands.common import lcl_problem, load_structured, local_algorithm, write_artifact
from lllocal.commands.models import CommandOutcome, RunConfig
from lllocal.commands.registry import command
from lllocal.config import app_cfg
from lllocal.constants import DEFAULT_REPORT_INDENT, CommandName, ExitCode
from lllocal.graphs.io import to_dot
from lllocal.local.runner import check_lcl, exact_success_probability, run_deterministic, run_randomized
from lllocal.local.structured import LabelingModel
from lllocal.solvers.certified import approximate_rational

logger = logging.getLogger(__name__)


def _deterministic(config: RunConfig) -> CommandOutcome:
    sg = load_structured(config)
    problem, algorithm = lcl_problem(config), local_algorithm(config)
    output = run_deterministic(algorithm, sg, list(range(sg.n)), config.rounds)
    verdict = check_lcl(problem, sg, output, max_workers=config.threads)
    report = {
        "mode": "deterministic",
        "problem": problem.name,
        "algorithm": algorithm.name,
        "rounds": config.rounds,
        "check": verdict.as_dict(),
        "labeling": output,
    }
    outcome = CommandOutcome(
        ExitCode.OK if verdict.ok else ExitCode.FAILED,
        report,
        f"{algorithm.name} with identifiers 0..{sg.n - 1}: "
        f"{'accepted' if verdict.ok else f'rejected at {len(verdict.violations)} vertices'}",
    )
    write_artifact(config, outcome, "labeling.json", LabelingModel(labels=output).model_dump_json(indent=DEFAULT_REPORT_INDENT))
    if config.dot:
        write_artifact(config, outcome, "dot", to_dot(sg.graph, vertex_labels=output))
    return outcome


@command(name=CommandName.SIMULATE)
def cmd_simulate(config: RunConfig) -> CommandOutcome:
    """Deterministic run with identity ids, or a randomized run when --labels gives ℓ."""
    if config.labels is None:
        return _deterministic(config)
    sg = load_structured(config)
    problem, algorithm = lcl_problem(config), local_algorithm(config)
    ell = config.labels
    randomized = run_randomized(
        problem, algorithm, sg, ell, config.rounds, config.trials, config.seed, max_workers=config.threads
    )
    report = {"mode": "randomized", **randomized.as_dict()}
    if ell**sg.n <= app_cfg.EXACT_ENUMERATION_CAP:
        exact = exact_success_probability(problem, algorithm, sg, ell, config.rounds)
        report["exact_success_probability"] = str(exact)
        report["exact_success_value"] = approximate_rational(exact)
    return CommandOutcome(
        ExitCode.OK,
        report,
        f"{algorithm.name} solved {problem.name} in {randomized.successes}/{randomized.trials} trials "
        f"(95% CI {randomized.ci_low:.4f}-{randomized.ci_high:.4f})",
    )
