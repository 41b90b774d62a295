"""
Separation witnesses: partitions of V(G) into parts U_0..U_s whose induced
components all fit a locality budget, and the partitions derived from them.
"""
import logging
import math
from dataclasses import dataclass
from pathlib import Path

from pydantic import BaseModel, Field

from lllocal.constants import DEFAULT_REPORT_INDENT
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.core import Graph, VertexSet, components
from lllocal.graphs.generators import grid_dimensions
from lllocal.shattering.partitions import FinitePartition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeparationWitness:
    parts: tuple[VertexSet, ...]
    budget: int

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(tuple(sorted(p)) for p in self.parts))
        if self.budget < 1:
            raise InvalidInputError(f"Locality budget must be positive, got {self.budget}")

    @property
    def s(self) -> int:
        return len(self.parts) - 1

    def rebudgeted(self, budget: int) -> "SeparationWitness":
        return SeparationWitness(self.parts, budget)


@dataclass(frozen=True)
class SeparationCheck:
    ok: bool
    largest_component: VertexSet
    part_index: int | None

    @property
    def offender_size(self) -> int:
        return len(self.largest_component)


def _require_partition(G: Graph, parts) -> None:
    seen: set[int] = set()
    for part in parts:
        for v in part:
            if not 0 <= v < G.n:
                raise InvalidInputError(f"Part contains vertex {v} outside the graph")
            if v in seen:
                raise InvalidInputError(f"Vertex {v} appears in more than one part")
            seen.add(v)
    if len(seen) != G.n:
        missing = sorted(set(G.vertices()) - seen)
        raise InvalidInputError(f"Parts do not cover vertices {missing[:5]}")


def verify_separation(G: Graph, parts, L: int) -> SeparationCheck:
    """Whether every component of every G[U_i] has at most L vertices; reports the largest component."""
    _require_partition(G, parts)
    largest: VertexSet = ()
    largest_part = None
    for i, part in enumerate(parts):
        for component in components(G, within=part):
            if len(component) > len(largest):
                largest, largest_part = component, i
    return SeparationCheck(ok=len(largest) <= L, largest_component=largest, part_index=largest_part)


def partition_from_separation(G: Graph, witness: SeparationWitness) -> FinitePartition:
    check = verify_separation(G, witness.parts, witness.budget)
    if not check.ok:
        raise InvalidInputError(
            f"Witness component of {check.offender_size} vertices exceeds budget {witness.budget}",
            details={"offender": list(check.largest_component[:20]), "part": check.part_index},
        )
    return FinitePartition(tuple(c for part in witness.parts for c in components(G, within=part)))


def _walk(G: Graph, component: VertexSet) -> tuple[list[int], bool]:
    """Vertices of a path or cycle component in walking order, and whether it is a cycle."""
    degrees = {v: G.degree(v) for v in component}
    if any(d > 2 for d in degrees.values()):
        raise InvalidInputError("interval_separation needs a disjoint union of paths and cycles")
    ends = [v for v in component if degrees[v] <= 1]
    is_cycle = not ends
    start = component[0] if is_cycle else min(ends)
    order = [start]
    previous = None
    current = start
    while True:
        nxt = [u for u in G.neighbors(current) if u != previous and u != start]
        if is_cycle and len(order) == 1:
            nxt = [min(G.neighbors(current))]
        if not nxt:
            break
        previous, current = current, nxt[0]
        order.append(current)
    return order, is_cycle


def interval_separation(G: Graph, L: int) -> SeparationWitness:
    """Two parts made of alternating blocks of at most L consecutive vertices along each path or cycle."""
    if L < 2:
        raise InvalidInputError(f"Block length must be at least 2, got {L}")
    parts: tuple[list[int], list[int]] = ([], [])
    for component in components(G):
        order, is_cycle = _walk(G, component)
        m = len(order)
        if is_cycle:
            if m < 2 * L:
                raise InvalidInputError(f"Cycle of length {m} is shorter than 2L = {2 * L}")
            blocks = math.ceil(m / L)
            blocks += blocks % 2
            sizes = [m // blocks + (1 if i < m % blocks else 0) for i in range(blocks)]
        else:
            sizes = [L] * (m // L) + ([m % L] if m % L else [])
        position = 0
        for i, size in enumerate(sizes):
            parts[i % 2].extend(order[position:position + size])
            position += size
    return SeparationWitness(tuple(p for p in parts if p) or ((),), L)


def grid_separation(G: Graph, L: int) -> SeparationWitness:
    """
    Brick-pattern tiling of a grid into L x L tiles, three-colored.

    Odd tile rows are shifted by L // 2, so each tile touches at most two tiles
    of each neighboring row and the tile adjacency is a triangular lattice;
    the coloring (h + 3j) / 2 mod 3 with h = 2i + (j mod 2) is proper on it.
    Every induced component is a single tile.
    """
    if L < 2:
        raise InvalidInputError(f"Tile size must be at least 2, got {L}")
    w, h = grid_dimensions(G)
    if w <= L and h <= L:
        return SeparationWitness((tuple(G.vertices()),), L * L)
    shift = L // 2
    parts: list[list[int]] = [[], [], []]
    for y in range(h):
        j = y // L
        offset = shift if j % 2 else 0
        for x in range(w):
            i = (x - offset) // L
            half = 2 * i + (j % 2)
            parts[((half + 3 * j) // 2) % 3].append(y * w + x)
    return SeparationWitness(tuple(p for p in parts if p), L * L)


class WitnessModel(BaseModel):
    parts: list[list[int]] = Field(description="Parts U_0..U_s as vertex id lists.", examples=[[[0, 1], [2, 3]]])
    budget: int = Field(ge=1, description="Locality budget L: maximum induced component size.", examples=[4])

    @classmethod
    def from_witness(cls, witness: SeparationWitness) -> "WitnessModel":
        return cls(parts=[list(p) for p in witness.parts], budget=witness.budget)

    def to_witness(self) -> SeparationWitness:
        return SeparationWitness(tuple(tuple(p) for p in self.parts), self.budget)


def load_witness(path: str | Path) -> SeparationWitness:
    try:
        return WitnessModel.model_validate_json(Path(path).read_text()).to_witness()
    except ValueError as e:
        raise InvalidInputError(f"Invalid witness file {path}: {e}") from e


def dump_witness(witness: SeparationWitness, path: str | Path) -> None:
    Path(path).write_text(WitnessModel.from_witness(witness).model_dump_json(indent=DEFAULT_REPORT_INDENT))
