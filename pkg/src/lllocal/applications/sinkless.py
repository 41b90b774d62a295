"""
Sinkless orientation as a CSP on the edges: color 0 orients an edge towards
its chosen endpoint c(e), color 1 away from it. The constraint at v forbids
the single assignment pointing every edge at v into v.
"""
import logging
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from lllocal.csp.model import CSP, Constraint
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.core import Graph

logger = logging.getLogger(__name__)

Arc = tuple[int, int]


def default_choice(G: Graph) -> list[int]:
    """c(e) = the smaller endpoint."""
    return [u for u, _ in G.edges]


def _checked_choice(G: Graph, choice: Sequence[int] | None) -> list[int]:
    chosen = default_choice(G) if choice is None else list(choice)
    if len(chosen) != G.m:
        raise InvalidInputError(f"Endpoint choice has {len(chosen)} entries for {G.m} edges")
    for i, (u, v) in enumerate(G.edges):
        if chosen[i] not in (u, v):
            raise InvalidInputError(f"Edge {i} = ({u}, {v}) cannot be oriented towards {chosen[i]}")
    return chosen


def towards(choice: Sequence[int], e: int, v: int) -> int:
    """The color that orients edge e into v."""
    return 0 if choice[e] == v else 1


def sinkless_orientation_csp(G: Graph, choice: Sequence[int] | None = None) -> CSP:
    chosen = _checked_choice(G, choice)
    isolated = [v for v in G.vertices() if G.degree(v) == 0]
    if isolated:
        raise InvalidInputError(f"Isolated vertices {isolated[:10]} can never have an outgoing edge")
    constraints = []
    for v in G.vertices():
        domain = G.incident_edges(v)
        sink = tuple(towards(chosen, e, v) for e in domain)
        constraints.append(Constraint(domain, frozenset({sink}), 2))
    return CSP.over_range(G.m, 2, constraints)


def decode_orientation(
    G: Graph, f: Mapping[int, int] | Sequence[int], choice: Sequence[int] | None = None
) -> list[Arc]:
    """Arc (tail, head) for every edge."""
    chosen = _checked_choice(G, choice)
    arcs = []
    for e, (u, v) in enumerate(G.edges):
        head = chosen[e] if f[e] == 0 else (v if chosen[e] == u else u)
        arcs.append((u + v - head, head))
    return arcs


@dataclass
class SinklessCheck:
    ok: bool
    sinks: list[int] = field(default_factory=list)


def verify_sinkless(G: Graph, arcs: Sequence[Arc]) -> SinklessCheck:
    if len(arcs) != G.m:
        raise InvalidInputError(f"Orientation has {len(arcs)} arcs for {G.m} edges")
    out_degree = [0] * G.n
    for e, (tail, head) in enumerate(arcs):
        if (min(tail, head), max(tail, head)) != G.edges[e]:
            raise InvalidInputError(f"Arc {e} = ({tail}, {head}) does not match edge {G.edges[e]}")
        out_degree[tail] += 1
    sinks = [v for v in G.vertices() if out_degree[v] == 0]
    return SinklessCheck(not sinks, sinks)
