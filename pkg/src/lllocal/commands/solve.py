import logging
import time

from lllocal.commands.common import load_instance, require, write_artifact
from lllocal.commands.models import CommandOutcome, RunConfig
from lllocal.commands.registry import command
from lllocal.constants import DEFAULT_REPORT_INDENT, CommandName, ExitCode, SolverKind
from lllocal.csp.algebra import solution_violations
from lllocal.csp.brute_force import brute_force_solve
from lllocal.csp.io import ColoringModel
from lllocal.csp.model import CSP, PartialColoring
from lllocal.exceptions import InvalidInputError, UnsatisfiableError
from lllocal.graphs.core import Graph
from lllocal.shattering.partitions import FinitePartition, load_partition, shattering_width
from lllocal.shattering.witnesses import load_witness, partition_from_separation
from lllocal.solvers.conditions import condition_report
from lllocal.solvers.moser_tardos import moser_tardos
from lllocal.solvers.shattering_solver import shattering_solve
from lllocal.utils.seeding import child_seed

logger = logging.getLogger(__name__)


def _shattering_inputs(config: RunConfig, csp: CSP, graph: Graph | None) -> tuple[FinitePartition, int, int]:
    """Partition, shattering number and class budget from --partition or --witness."""
    if config.partition is not None:
        partition = load_partition(config.partition)
        s = shattering_width(partition, csp) if config.s is None else config.s
        budget = partition.largest_class() if config.locality is None else config.locality
        return partition, s, budget
    if config.witness is not None:
        G = require(config, graph, "graph")
        witness = load_witness(config.witness)
        if config.locality is not None:
            witness = witness.rebudgeted(config.locality)
        return partition_from_separation(G, witness), witness.s + 1, witness.budget
    raise InvalidInputError("The shattering solver needs --partition or --witness with --graph")


def _solve(config: RunConfig, csp: CSP, graph: Graph | None, report: dict) -> PartialColoring | None:
    match config.solver:
        case SolverKind.BRUTE:
            return brute_force_solve(csp, config.budget, config.threads)
        case SolverKind.MOSER_TARDOS:
            result = moser_tardos(csp, child_seed(config.seed, "cmd_solve"))
            report["moser_tardos"] = result.as_dict()
            return result.coloring if result.solved else None
        case SolverKind.SHATTERING:
            partition, s, budget = _shattering_inputs(config, csp, graph)
            report["partition"] = {"classes": len(partition), "largest_class": partition.largest_class(), "s": s}
            result = shattering_solve(csp, partition, s, budget)
            report["shattering"] = result.report(include_timing=config.timings)
            return result.coloring


@command(name=CommandName.SOLVE)
def cmd_solve(config: RunConfig) -> CommandOutcome:
    started = time.perf_counter()
    csp, graph = load_instance(config)
    csp = csp.materialized()
    s = config.s if config.s is not None else 1
    report: dict = {
        "solver": config.solver.value,
        "variables": len(csp.universe),
        "constraints": len(csp.constraints),
        "q": csp.q,
        "conditions": [r.as_dict() for r in condition_report(csp, s)],
    }
    f = _solve(config, csp, graph, report)
    if f is None:
        raise UnsatisfiableError(
            f"{config.solver.value} found no solution", details=report | {"verdict": "unsatisfiable"}
        )

    violations = solution_violations(csp, f)
    report["verification"] = {"ok": not violations, "violated_constraints": violations[:20]}
    report["solution"] = f.as_list(csp.universe)
    if config.timings:
        report["wall_time_s"] = round(time.perf_counter() - started, 6)
    exit_code = ExitCode.OK if not violations else ExitCode.FAILED
    outcome = CommandOutcome(
        exit_code,
        report,
        f"{config.solver.value}: {'solved and verified' if not violations else 'verification failed'}"
        f" ({len(csp.universe)} variables, {len(csp.constraints)} constraints)",
    )
    coloring = ColoringModel.from_coloring(f, csp.universe)
    write_artifact(config, outcome, "coloring.json", coloring.model_dump_json(indent=DEFAULT_REPORT_INDENT))
    return outcome
