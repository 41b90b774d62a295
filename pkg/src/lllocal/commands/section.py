import logging

from pydantic import BaseModel, Field

from lllocal.applications.sections import (
    b_f_constraint,
    closed_neighborhood,
    estimate_F_star,
    exact_b_f_probability,
    independent_complete_section,
    without_inner_edges,
)
from lllocal.commands.common import input_path, require, write_artifact
from lllocal.commands.models import CommandOutcome, RunConfig
from lllocal.commands.registry import command
from lllocal.config import app_cfg
from lllocal.constants import DEFAULT_REPORT_INDENT, CommandName, ExitCode, SolverKind
from lllocal.csp.algebra import probability
from lllocal.exceptions import BudgetExceededError, InvalidInputError
from lllocal.graphs.core import max_degree
from lllocal.graphs.io import load_graph
from lllocal.solvers.certified import approximate_rational

logger = logging.getLogger(__name__)


class SectionModel(BaseModel):
    section: list[int] = Field(description="Chosen vertices, one per component of G2.")
    families: list[list[int]] = Field(description="The k-subset F chosen inside each component.")


def _first_family_stats(G1, families, delta: int, config: RunConfig) -> dict:
    reduced = without_inner_edges(G1, families)
    F = families[0]
    stats = {"family": list(F), "f_star": estimate_F_star(reduced, F, delta, config.trials, config.seed).as_dict()}
    try:
        exact = exact_b_f_probability(reduced, F, delta)
    except BudgetExceededError as e:
        logger.info(f"Skipping exact P[B_F]: {e}")
        return stats
    stats["p_B_F"] = str(exact)
    stats["p_B_F_value"] = approximate_rational(exact)
    if delta ** len(closed_neighborhood(reduced, F)) <= app_cfg.EXACT_ENUMERATION_CAP:
        stats["p_B_F_matches_constraint"] = exact == probability(b_f_constraint(reduced, F, delta))
    return stats


@command(name=CommandName.SECTION)
def cmd_section(config: RunConfig) -> CommandOutcome:
    G1 = load_graph(input_path(config, 0, "the graph G1"))
    G2 = load_graph(input_path(config, 1, "the graph G2"))
    k = require(config, config.k, "k")
    delta = config.delta if config.delta is not None else max(max_degree(G1), 2)
    if config.solver == SolverKind.SHATTERING:
        raise InvalidInputError("Complete sections are solved with brute or moser-tardos")
    result = independent_complete_section(
        G1, G2, k, delta, solver=config.solver, seed=config.seed, budget=config.budget
    )
    report = {"found": result.found, **result.report}
    if result.families:
        report["first_family"] = _first_family_stats(G1, result.families, delta, config)
    if not result.found:
        return CommandOutcome(ExitCode.FAILED, report, f"No independent complete section for k={k}, Δ={delta}")

    outcome = CommandOutcome(
        ExitCode.OK,
        report,
        f"Independent complete section of {len(result.section)} vertices (k={k}, Δ={delta})",
    )
    model = SectionModel(section=list(result.section), families=[list(F) for F in result.families])
    write_artifact(config, outcome, "section.json", model.model_dump_json(indent=DEFAULT_REPORT_INDENT))
    return outcome
