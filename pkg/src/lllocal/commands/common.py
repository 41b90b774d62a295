"""
Input loading, name lookups and artifact writing shared by the command handlers.
"""
import logging
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field

from lllocal.applications.coloring import proper_coloring_csp
from lllocal.applications.sinkless import sinkless_orientation_csp
from lllocal.commands.models import CommandOutcome, RunConfig
from lllocal.constants import DEFAULT_REPORT_INDENT, AlgorithmName, CSPBuilder, LCLName
from lllocal.csp.io import load_csp
from lllocal.csp.model import CSP
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.core import Graph
from lllocal.local import algorithms, problems
from lllocal.local.problems import LCLProblem, LocalAlgorithm
from lllocal.local.structured import StructuredGraph, load_structured_graph

logger = logging.getLogger(__name__)


class RunReport(BaseModel):
    """Top-level JSON document written by every command."""

    run: dict[str, Any] = Field(description="Command, seed and precision cap of the run.")
    exit_code: int = Field(description="Process exit code.")
    summary: str = Field(description="One-line outcome.")
    result: dict[str, Any] = Field(default_factory=dict, description="Command-specific report body.")
    artifacts: dict[str, str] = Field(default_factory=dict, description="Side files written next to the report.")


def require(config: RunConfig, value, flag: str):
    if value is None:
        raise InvalidInputError(f"--{flag} is required for {config.command.value}")
    return value


def input_path(config: RunConfig, index: int, what: str) -> Path:
    if len(config.inputs) <= index:
        raise InvalidInputError(f"{config.command.value} needs {what} as --input number {index + 1}")
    return config.inputs[index]


def graph_path(config: RunConfig) -> Path:
    return config.graph if config.graph is not None else input_path(config, 0, "a graph file")


def load_structured(config: RunConfig) -> StructuredGraph:
    """Plain graph files load as structured graphs with an empty σ."""
    return load_structured_graph(graph_path(config))


def load_instance(config: RunConfig) -> tuple[CSP, Graph | None]:
    """The CSP named by --input, or one built from --graph with --builder."""
    if config.builder is None:
        csp = load_csp(input_path(config, 0, "a CSP file"))
        graph = load_structured_graph(config.graph).graph if config.graph is not None else None
        return csp, graph
    G = load_structured(config).graph
    if config.builder == CSPBuilder.COLORING:
        return proper_coloring_csp(G, require(config, config.q, "q")), G
    return sinkless_orientation_csp(G), G


def lcl_problem(config: RunConfig) -> LCLProblem:
    name = require(config, config.problem, "problem")
    match name:
        case LCLName.PROPER_COLORING:
            return problems.proper_coloring_lcl(require(config, config.q, "q"))
        case LCLName.DISTINCT_LABEL:
            return problems.distinct_label_lcl()
        case LCLName.NON_MONOCHROMATIC:
            return problems.non_monochromatic_lcl()
        case LCLName.MIS:
            return problems.mis_lcl()
        case LCLName.SINKLESS:
            return problems.sinkless_orientation_lcl()
        case LCLName.ALWAYS_TRUE:
            return problems.always_true_lcl()
    raise InvalidInputError(f"Unknown LCL {name}")


def local_algorithm(config: RunConfig) -> LocalAlgorithm:
    name = require(config, config.algorithm, "algorithm")
    match name:
        case AlgorithmName.OWN_LABEL:
            return algorithms.own_label()
        case AlgorithmName.CONSTANT:
            return algorithms.constant(0)
        case AlgorithmName.GREEDY_BY_ID:
            return algorithms.greedy_by_id(config.rounds)
        case AlgorithmName.LUBY_MIS:
            # phases whose exact view fits in T rounds
            return algorithms.luby_mis(max(1, (config.rounds + 1) // 2))
    raise InvalidInputError(f"Unknown algorithm {name}")


def artifact_path(config: RunConfig, name: str) -> Path | None:
    """`report.json` + `coloring.json` -> `report.coloring.json`; None without --out."""
    if config.out is None:
        return None
    return config.out.with_name(f"{config.out.stem}.{name}")


def write_artifact(config: RunConfig, outcome: CommandOutcome, name: str, text: str) -> None:
    path = artifact_path(config, name)
    if path is None:
        logger.debug(f"No --out given; skipping artifact {name}")
        return
    path.write_text(text)
    outcome.artifacts[name] = str(path)


def render_report(config: RunConfig, outcome: CommandOutcome) -> str:
    return RunReport(
        run=config.recorded(),
        exit_code=int(outcome.exit_code),
        summary=outcome.summary,
        result=outcome.report,
        artifacts=outcome.artifacts,
    ).model_dump_json(indent=DEFAULT_REPORT_INDENT)
