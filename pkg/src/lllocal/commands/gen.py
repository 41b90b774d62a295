import logging

from lllocal.applications.coloring import proper_coloring_csp
from lllocal.applications.sinkless import sinkless_orientation_csp
from lllocal.commands.common import require, write_artifact
from lllocal.commands.models import CommandOutcome, RunConfig
from lllocal.commands.registry import command
from lllocal.constants import DEFAULT_REPORT_INDENT, CommandName, CSPBuilder, ExitCode, GraphFamily, WitnessKind
from lllocal.csp.io import CSPModel
from lllocal.exceptions import InvalidInputError
from lllocal.graphs import generators
from lllocal.graphs.core import Graph, max_degree
from lllocal.graphs.io import GraphModel, to_dot
from lllocal.shattering.partitions import PartitionModel
from lllocal.shattering.witnesses import (
    WitnessModel,
    grid_separation,
    interval_separation,
    partition_from_separation,
)
from lllocal.utils.seeding import child_seed

logger = logging.getLogger(__name__)


def _sizes(config: RunConfig, count: int) -> list[int]:
    if len(config.size) != count:
        raise InvalidInputError(f"{config.family.value} needs {count} --size value(s), got {config.size}")
    return config.size


def _graph(config: RunConfig) -> Graph:
    family = require(config, config.family, "family")
    match family:
        case GraphFamily.PATH:
            return generators.path(*_sizes(config, 1))
        case GraphFamily.CYCLE:
            return generators.cycle(*_sizes(config, 1))
        case GraphFamily.GRID:
            return generators.grid(*_sizes(config, 2))
        case GraphFamily.RANDOM_REGULAR:
            (n,) = _sizes(config, 1)
            d = require(config, config.degree, "degree")
            return generators.random_regular(n, d, child_seed(config.seed, "cmd_gen"))
    raise InvalidInputError(f"Unknown graph family {family}")


@command(name=CommandName.GEN)
def cmd_gen(config: RunConfig) -> CommandOutcome:
    """Graph file, plus a separation witness with its partition and an optional built CSP."""
    G = _graph(config)
    report: dict = {"family": config.family.value, "n": G.n, "m": G.m, "max_degree": max_degree(G)}
    outcome = CommandOutcome(ExitCode.OK, report, f"{config.family.value} graph with {G.n} vertices and {G.m} edges")
    write_artifact(config, outcome, "graph.json", GraphModel.from_graph(G).model_dump_json(indent=DEFAULT_REPORT_INDENT))

    if config.witness_kind is not None:
        L = require(config, config.locality, "locality")
        if config.witness_kind == WitnessKind.INTERVAL:
            witness = interval_separation(G, L)
        else:
            witness = grid_separation(G, L)
        partition = partition_from_separation(G, witness)
        report["witness"] = {
            "kind": config.witness_kind.value,
            "parts": len(witness.parts),
            "s": witness.s,
            "budget": witness.budget,
            "classes": len(partition),
            "largest_class": partition.largest_class(),
        }
        write_artifact(config, outcome, "witness.json", WitnessModel.from_witness(witness).model_dump_json(indent=DEFAULT_REPORT_INDENT))
        write_artifact(
            config, outcome, "partition.json", PartitionModel.from_partition(partition).model_dump_json(indent=DEFAULT_REPORT_INDENT)
        )
        outcome.summary += f"; {config.witness_kind.value} witness with {len(witness.parts)} parts, L={witness.budget}"

    if config.builder is not None:
        if config.builder == CSPBuilder.COLORING:
            csp = proper_coloring_csp(G, require(config, config.q, "q"))
        else:
            csp = sinkless_orientation_csp(G)
        report["csp"] = {"builder": config.builder.value, "variables": len(csp.universe), "constraints": len(csp)}
        write_artifact(config, outcome, "csp.json", CSPModel.from_csp(csp).model_dump_json(indent=DEFAULT_REPORT_INDENT))

    if config.dot:
        write_artifact(config, outcome, "dot", to_dot(G))
    return outcome
