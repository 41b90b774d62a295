import logging

from lllocal.commands.common import load_instance, require
from lllocal.commands.models import CommandOutcome, RunConfig
from lllocal.commands.registry import command
from lllocal.constants import CommandName, ExitCode
from lllocal.csp.algebra import d_param, p_param
from lllocal.shattering.witnesses import load_witness
from lllocal.solvers.certified import approximate_rational
from lllocal.solvers.conditions import condition_report, shattering_number_upper_bounds

logger = logging.getLogger(__name__)


@command(name=CommandName.CHECK)
def cmd_check(config: RunConfig) -> CommandOutcome:
    """Condition margins only; never solves."""
    csp, graph = load_instance(config)
    csp = csp.materialized()
    s = config.s if config.s is not None else 1
    p, d = p_param(csp), d_param(csp)
    reports = condition_report(csp, s)
    report = {
        "variables": len(csp.universe),
        "constraints": len(csp.constraints),
        "q": csp.q,
        "p": str(p),
        "p_value": approximate_rational(p),
        "d": d,
        "max_domain_size": csp.max_domain_size(),
        "conditions": [r.as_dict() for r in reports],
    }
    if config.witness is not None:
        G = require(config, graph, "graph")
        report["shattering_number"] = shattering_number_upper_bounds(csp, G, load_witness(config.witness))

    verdicts = ", ".join(f"{r.kind.value}={r.verdict.value}" for r in reports)
    return CommandOutcome(ExitCode.OK, report, f"p={approximate_rational(p)}, d={d}: {verdicts}")
