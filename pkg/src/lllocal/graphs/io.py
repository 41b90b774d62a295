from pathlib import Path
from typing import Sequence

from pydantic import BaseModel, Field, model_validator

from lllocal.constants import DEFAULT_REPORT_INDENT
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.core import Graph

# Graphviz X11 names cycled through for edge colors in DOT output
DOT_PALETTE = [
    "black", "red", "blue", "green4", "orange", "purple", "brown", "magenta",
    "cyan4", "gold3", "gray50", "darkolivegreen",
]


class GraphModel(BaseModel):
    """JSON form of a finite simple graph."""

    n: int = Field(ge=0, description="Vertex count; vertices are 0..n-1.", examples=[3])
    edges: list[tuple[int, int]] = Field(
        default_factory=list,
        description="Undirected edges as [u, v] pairs with u < v, sorted lexicographically.",
        examples=[[[0, 1], [1, 2]]],
    )

    @model_validator(mode="after")
    def check_edges(self):
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise ValueError(f"Invalid edge ({u}, {v}) for n={self.n}")
        return self

    @classmethod
    def from_graph(cls, G: Graph) -> "GraphModel":
        return cls(n=G.n, edges=list(G.edges))

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def load_graph(path: str | Path) -> Graph:
    try:
        return GraphModel.model_validate_json(Path(path).read_text()).to_graph()
    except ValueError as e:
        raise InvalidInputError(f"Invalid graph file {path}: {e}") from e


def dump_graph(G: Graph, path: str | Path) -> None:
    Path(path).write_text(GraphModel.from_graph(G).model_dump_json(indent=DEFAULT_REPORT_INDENT))


def to_dot(
    G: Graph,
    vertex_labels: Sequence[int] | None = None,
    edge_colors: Sequence[int] | None = None,
    name: str = "G",
) -> str:
    """Render G in Graphviz DOT; edge colors index into a fixed palette and are also shown as labels."""
    lines = [f"graph {name} {{"]
    for v in G.vertices():
        label = f' [label="{v}:{vertex_labels[v]}"]' if vertex_labels is not None else ""
        lines.append(f"  {v}{label};")
    for i, (u, v) in enumerate(G.edges):
        attrs = ""
        if edge_colors is not None:
            color = edge_colors[i]
            attrs = f' [color="{DOT_PALETTE[color % len(DOT_PALETTE)]}", label="{color}"]'
        lines.append(f"  {u} -- {v}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
