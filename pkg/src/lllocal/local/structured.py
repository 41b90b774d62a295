"""
Structured graphs (a graph plus a sparse labeling of vertex tuples) and the
rooted labeled balls that LOCAL algorithms and LCL verifiers look at.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from pydantic import BaseModel, Field

from lllocal.constants import DEFAULT_REPORT_INDENT
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.core import Graph, distances_from
from lllocal.graphs.io import GraphModel

logger = logging.getLogger(__name__)

Labeling = Sequence[int] | Mapping[int, int]


@dataclass(frozen=True)
class StructuredGraph:
    graph: Graph
    sigma: Mapping[tuple[int, ...], int] = field(default_factory=dict)
    arity: int | None = None

    def __post_init__(self):
        sigma = {tuple(t): value for t, value in self.sigma.items()}
        longest = max((len(t) for t in sigma), default=0)
        arity = longest if self.arity is None else self.arity
        for t, value in sigma.items():
            if len(t) > arity:
                raise InvalidInputError(f"Structure tuple {t} is longer than the arity {arity}")
            if any(not 0 <= x < self.graph.n for x in t):
                raise InvalidInputError(f"Structure tuple {t} names a vertex outside the graph")
            if value < 0:
                raise InvalidInputError(f"Structure value {value} at {t} is negative")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "arity", arity)

    @classmethod
    def plain(cls, G: Graph) -> "StructuredGraph":
        return cls(G, {}, 0)

    @classmethod
    def coerce(cls, G: "Graph | StructuredGraph") -> "StructuredGraph":
        return G if isinstance(G, StructuredGraph) else cls.plain(G)

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def tuples_at(self) -> dict[int, list[tuple[int, ...]]]:
        """Structure tuples indexed by their smallest vertex, which sigma_inside relies on."""
        index: dict[int, list[tuple[int, ...]]] = {}
        for t in self.sigma:
            if t:
                index.setdefault(min(t), []).append(t)
        return index

    def sigma_inside(self, members: set[int]) -> dict[tuple[int, ...], int]:
        result = {t: self.sigma[t] for v in members for t in self.tuples_at.get(v, ()) if all(x in members for x in t)}
        if () in self.sigma:
            result[()] = self.sigma[()]
        return result


def directed(G: Graph, arcs: Iterable[tuple[int, int]]) -> StructuredGraph:
    """Orientation as structure: σ(u, v) = 1 for every arc u -> v."""
    sigma = {}
    for u, v in arcs:
        if not G.has_edge(u, v):
            raise InvalidInputError(f"Arc ({u}, {v}) is not an edge")
        sigma[(u, v)] = 1
    return StructuredGraph(G, sigma, 2)


def ordered(G: Graph, rank: Sequence[int]) -> StructuredGraph:
    """Linear order as structure on adjacent pairs: σ(u, v) = 1 iff rank[u] < rank[v]."""
    if sorted(rank) != list(range(G.n)):
        raise InvalidInputError("Rank must be a permutation of the vertex ids")
    sigma = {(u, v): 1 for u, v in G.edges if rank[u] < rank[v]}
    sigma.update({(v, u): 1 for u, v in G.edges if rank[v] < rank[u]})
    return StructuredGraph(G, sigma, 2)


def vertex_edge_incidence(G: Graph) -> StructuredGraph:
    """
    Bipartite incidence graph: vertex v keeps id v, edge i becomes vertex n + i.

    σ((v,)) = 0 marks original vertices and σ((n+i,)) = 1 marks edges.
    """
    n = G.n
    incidence = Graph.from_edges(n + G.m, [(x, n + i) for i, edge in enumerate(G.edges) for x in edge])
    sigma = {(v,): 0 for v in range(n)}
    sigma.update({(n + i,): 1 for i in range(G.m)})
    return StructuredGraph(incidence, sigma, 1)


@dataclass(frozen=True)
class RootedBall:
    """
    Induced labeled substructure on B(v, R), re-indexed so that vertex 0 is the
    root and indices follow BFS order (ties by original id).
    """

    graph: Graph
    root: int
    labels: tuple[int, ...]
    sigma: Mapping[tuple[int, ...], int]
    radius: int
    distances: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.graph.n

    @property
    def root_label(self) -> int:
        return self.labels[self.root]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.graph.neighbors(i)

    def relabeled(self, permutation: Sequence[int]) -> "RootedBall":
        """Same ball with index i renamed to permutation[i]."""
        n = self.size
        if sorted(permutation) != list(range(n)):
            raise InvalidInputError("Relabeling must be a permutation of the ball indices")
        labels = [0] * n
        distances = [0] * n
        for i in range(n):
            labels[permutation[i]] = self.labels[i]
            distances[permutation[i]] = self.distances[i]
        graph = Graph.from_edges(n, [(permutation[u], permutation[v]) for u, v in self.graph.edges])
        sigma = {tuple(permutation[x] for x in t): value for t, value in self.sigma.items()}
        return RootedBall(graph, permutation[self.root], tuple(labels), sigma, self.radius, tuple(distances))


@dataclass(frozen=True)
class BallTemplate:
    """Unlabeled shape of a ball; combine with a labeling to get the RootedBall."""

    graph: Graph
    sigma: Mapping[tuple[int, ...], int]
    radius: int
    original_ids: tuple[int, ...]
    distances: tuple[int, ...]

    def with_labels(self, labeling: Labeling) -> RootedBall:
        labels = tuple(labeling[v] for v in self.original_ids)
        return RootedBall(self.graph, 0, labels, self.sigma, self.radius, self.distances)


def ball_template(sg: StructuredGraph, v: int, R: int) -> BallTemplate:
    dist = distances_from(sg.graph, v, R)
    original = sorted(dist, key=lambda u: (dist[u], u))
    position = {u: i for i, u in enumerate(original)}
    edges = [(position[a], position[b]) for a in original for b in sg.graph.neighbors(a) if a < b and b in position]
    graph = Graph.from_edges(len(original), edges)
    sigma = {tuple(position[x] for x in t): value for t, value in sg.sigma_inside(set(original)).items()}
    return BallTemplate(graph, sigma, R, tuple(original), tuple(dist[u] for u in original))


def extract_ball(sg: StructuredGraph, labeling: Labeling, v: int, R: int) -> RootedBall:
    if R < 0:
        raise InvalidInputError(f"Radius must be non-negative, got {R}")
    return ball_template(sg, v, R).with_labels(labeling)


class SigmaEntryModel(BaseModel):
    tuple_: list[int] = Field(alias="tuple", description="Vertex tuple in the domain of σ.")
    value: int = Field(ge=0, description="σ value of the tuple.")

    model_config = {"populate_by_name": True}


class StructuredGraphModel(GraphModel):
    """Graph schema extended with the sparse structure map."""

    sigma: list[SigmaEntryModel] = Field(default_factory=list, description="Entries of σ.")

    @classmethod
    def from_structured(cls, sg: StructuredGraph) -> "StructuredGraphModel":
        entries = [SigmaEntryModel(tuple=list(t), value=value) for t, value in sorted(sg.sigma.items())]
        return cls(n=sg.graph.n, edges=list(sg.graph.edges), sigma=entries)

    def to_structured(self) -> StructuredGraph:
        return StructuredGraph(self.to_graph(), {tuple(e.tuple_): e.value for e in self.sigma})


class LabelingModel(BaseModel):
    labels: list[int] = Field(description="Label of each vertex in id order.", examples=[[0, 1, 0]])


def load_structured_graph(path: str | Path) -> StructuredGraph:
    try:
        return StructuredGraphModel.model_validate_json(Path(path).read_text()).to_structured()
    except ValueError as e:
        raise InvalidInputError(f"Invalid structured graph file {path}: {e}") from e


def dump_labeling(labels: Sequence[int], path: str | Path) -> None:
    Path(path).write_text(LabelingModel(labels=list(labels)).model_dump_json(indent=DEFAULT_REPORT_INDENT))
