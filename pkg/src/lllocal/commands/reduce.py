import logging

from lllocal.bridge.pipeline import lcl_pipeline
from lllocal.bridge.reduction import lcl_to_csp, locality_n_bound, verify_reduction
from lllocal.commands.common import lcl_problem, load_structured, local_algorithm, require, write_artifact
from lllocal.commands.models import CommandOutcome, RunConfig
from lllocal.commands.registry import command
from lllocal.constants import DEFAULT_REPORT_INDENT, CommandName, ExitCode
from lllocal.csp.io import CSPModel
from lllocal.graphs.io import to_dot
from lllocal.local.structured import LabelingModel
from lllocal.shattering.witnesses import load_witness

logger = logging.getLogger(__name__)


@command(name=CommandName.REDUCE)
def cmd_reduce(config: RunConfig) -> CommandOutcome:
    """
    LCL + algorithm -> CSP over labels, audited. With --witness the reduced
    CSP is also solved end to end and the decoded labeling written out.
    """
    sg = load_structured(config)
    problem, algorithm = lcl_problem(config), local_algorithm(config)
    ell = require(config, config.labels, "labels")
    out = lcl_to_csp(problem, algorithm, config.rounds, ell, sg, max_workers=config.threads)
    audit = verify_reduction(out, samples=config.trials, seed=config.seed)
    report = {
        "problem": problem.name,
        "algorithm": algorithm.name,
        "rounds": config.rounds,
        "label_range": ell,
        "radius_star": out.radius_star,
        "locality_n": locality_n_bound(sg, out.radius_star),
        "ball_shapes": out.template_classes,
        "lazy_constraints": out.lazy_constraints,
        "audit": audit.as_dict(),
    }
    outcome = CommandOutcome(
        ExitCode.OK if audit.ok else ExitCode.FAILED,
        report,
        f"{problem.name} under {algorithm.name}: {len(out.csp.constraints)} constraints on "
        f"{out.radius_star}-balls, audit {'ok' if audit.ok else 'failed'}",
    )
    if out.lazy_constraints == 0:
        write_artifact(config, outcome, "csp.json", CSPModel.from_csp(out.csp).model_dump_json(indent=DEFAULT_REPORT_INDENT))

    if config.witness is not None and audit.ok:
        result = lcl_pipeline(problem, algorithm, config.rounds, ell, sg, load_witness(config.witness), config.locality)
        report["pipeline"] = result.report
        outcome.summary += f"; pipeline {result.report['verdict']}"
        write_artifact(
            config, outcome, "labeling.json", LabelingModel(labels=result.labeling).model_dump_json(indent=DEFAULT_REPORT_INDENT)
        )
        if config.dot:
            write_artifact(config, outcome, "dot", to_dot(sg.graph, vertex_labels=result.labeling))
    return outcome
