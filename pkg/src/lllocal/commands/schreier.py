import logging

from pydantic import BaseModel, Field

from lllocal.applications.edge_coloring import (
    CHROMATIC_INDEX_EDGE_CAP,
    chromatic_index_brute_force,
    verify_edge_coloring_as_lcl,
)
from lllocal.applications.schreier import (
    SchreierAction,
    load_action,
    schreier_edge_coloring,
    schreier_graph,
    translation_action,
)
from lllocal.commands.common import write_artifact
from lllocal.commands.models import CommandOutcome, RunConfig
from lllocal.commands.registry import command
from lllocal.constants import DEFAULT_REPORT_INDENT, CommandName, ExitCode
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.io import GraphModel, to_dot

logger = logging.getLogger(__name__)


class EdgeColoringModel(BaseModel):
    graph: GraphModel = Field(description="The Schreier graph; edge i is graph.edges[i].")
    generators: list[str] = Field(description="Generator contributing each edge.")
    colors: list[int] = Field(description="Color of each edge.")
    palette: int = Field(description="Number of distinct colors.")


def _action(config: RunConfig) -> SchreierAction:
    if config.inputs:
        return load_action(config.inputs[0])
    if not config.moduli or not config.steps:
        raise InvalidInputError("schreier needs an action file or --moduli with --steps")
    try:
        steps = [[int(c) for c in step.split(",")] for step in config.steps]
    except ValueError as e:
        raise InvalidInputError(f"Steps must be comma-separated integers: {e}") from e
    return translation_action(config.moduli, steps)


@command(name=CommandName.SCHREIER)
def cmd_schreier(config: RunConfig) -> CommandOutcome:
    action = _action(config)
    result = schreier_edge_coloring(action, via_sections=config.via_sections, seed=config.seed)
    G, names = schreier_graph(action)
    colors = result.as_list()
    report = {
        "points": action.points,
        "generators": len(action.generators),
        **result.report,
        "lcl_check": verify_edge_coloring_as_lcl(G, colors, len(action.generators) + 1),
    }
    if G.m <= CHROMATIC_INDEX_EDGE_CAP:
        report["chromatic_index"] = chromatic_index_brute_force(G)
    outcome = CommandOutcome(
        ExitCode.OK,
        report,
        f"Schreier graph on {action.points} points, |F|={len(action.generators)}: "
        f"{result.palette} colors (bound {len(action.generators) + 1})",
    )
    coloring = EdgeColoringModel(
        graph=GraphModel.from_graph(G),
        generators=[names[e] for e in range(G.m)],
        colors=colors,
        palette=result.palette,
    )
    write_artifact(config, outcome, "edge-coloring.json", coloring.model_dump_json(indent=DEFAULT_REPORT_INDENT))
    if config.dot:
        write_artifact(config, outcome, "dot", to_dot(G, edge_colors=colors))
    return outcome
