"""
Vertex colorings: the proper-coloring CSP, palette-offset unions of part
colorings, and colorings built around an independent complete section.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from lllocal.csp.model import CSP, Constraint
from lllocal.exceptions import AuditError, InvalidInputError
from lllocal.graphs.core import Graph, VertexSet, components, is_independent, max_degree

logger = logging.getLogger(__name__)


def proper_coloring_csp(G: Graph, q: int) -> CSP:
    """One constraint per edge forbidding the q monochromatic assignments."""
    if q < 1:
        raise InvalidInputError(f"Color count must be positive, got {q}")
    diagonal = frozenset((i, i) for i in range(q))
    return CSP.over_range(G.n, q, (Constraint((u, v), diagonal, q) for u, v in G.edges))


@dataclass
class VertexColoring:
    colors: dict[int, int]
    palette: int

    def as_list(self, n: int) -> list[int]:
        return [self.colors[v] for v in range(n)]


@dataclass
class ColoringCheck:
    ok: bool
    palette: int
    conflicts: list[tuple[int, int]] = field(default_factory=list)
    uncolored: list[int] = field(default_factory=list)

    def as_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "palette": self.palette,
            "conflicts": [list(edge) for edge in self.conflicts],
            "uncolored": self.uncolored,
        }


def verify_vertex_coloring(G: Graph, colors: Mapping[int, int] | Sequence[int]) -> ColoringCheck:
    lookup = dict(enumerate(colors)) if isinstance(colors, Sequence) else dict(colors)
    uncolored = [v for v in G.vertices() if v not in lookup]
    conflicts = [(u, v) for u, v in G.edges if u in lookup and v in lookup and lookup[u] == lookup[v]]
    palette = len(set(lookup.values()))
    return ColoringCheck(not conflicts and not uncolored, palette, conflicts, uncolored)


def union_coloring(
    parts: Sequence[tuple[Iterable[int], Mapping[int, int]]],
    palettes: Sequence[int] | None = None,
    n: int | None = None,
) -> VertexColoring:
    """
    Disjoint union of part colorings, shifting part i by the palettes of parts
    before it. A part's palette defaults to its largest color plus one. With
    `n`, the parts must cover 0..n-1 exactly.
    """
    if palettes is not None and len(palettes) != len(parts):
        raise InvalidInputError("Need one palette size per part")
    colors: dict[int, int] = {}
    offset = 0
    for i, (members, coloring) in enumerate(parts):
        members = list(members)
        size = palettes[i] if palettes is not None else max((coloring[v] for v in members), default=-1) + 1
        for v in members:
            if v in colors:
                raise InvalidInputError(f"Vertex {v} belongs to more than one part")
            if not 0 <= coloring[v] < size:
                raise InvalidInputError(f"Color {coloring[v]} of vertex {v} is outside part {i}'s palette of {size}")
            colors[v] = coloring[v] + offset
        offset += size
    if n is not None:
        missing = [v for v in range(n) if v not in colors]
        if missing or len(colors) != n:
            raise InvalidInputError(f"Parts leave vertices {missing[:10]} uncovered")
    return VertexColoring(colors, offset)


def degree_deficient_coloring(G: Graph, U: Iterable[int], k: int) -> dict[int, int]:
    """
    Color G[U] with k colors, given that every component of G[U] has a vertex
    of degree below k there. Each component is ordered by BFS from such a
    vertex and colored greedily in reverse order, so every vertex still has
    an uncolored neighbor (its BFS parent) when its turn comes.
    """
    members = set(U)
    colors: dict[int, int] = {}
    for component in components(G, within=members):
        degree = {v: sum(1 for u in G.neighbors(v) if u in members) for v in component}
        root = next((v for v in component if degree[v] < k), None)
        if root is None:
            raise InvalidInputError(f"Component starting at {component[0]} has no vertex of degree below {k}")
        order = [root]
        seen = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in G.neighbors(x):
                if y in members and y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
        for v in reversed(order):
            taken = {colors[u] for u in G.neighbors(v) if u in colors}
            color = next(c for c in range(k + 1) if c not in taken)
            if color >= k:
                raise AuditError(f"Greedy coloring needed a color beyond {k} at vertex {v}")
            colors[v] = color
    return colors


def section_coloring(G: Graph, parts: Sequence[Iterable[int]], S: Iterable[int]) -> VertexColoring:
    """
    Proper coloring with at most 1 + Σ Δ(G[U_i]) colors: S gets one reserved
    color and each U_i \\ S is colored with Δ(G[U_i]) colors.
    """
    section = set(S)
    if not is_independent(G, section):
        raise InvalidInputError("Section is not independent")
    pieces: list[tuple[VertexSet, Mapping[int, int]]] = [(tuple(sorted(section)), {v: 0 for v in section})]
    palettes = [1]
    for i, part in enumerate(parts):
        part = tuple(sorted(set(part)))
        for component in components(G, within=part):
            if not section.intersection(component):
                raise InvalidInputError(f"Section misses a component of part {i} containing vertex {component[0]}")
        k = max_degree(G, within=part)
        rest = tuple(v for v in part if v not in section)
        pieces.append((rest, degree_deficient_coloring(G, rest, k) if rest else {}))
        palettes.append(k)
    coloring = union_coloring(pieces, palettes, n=G.n)
    logger.debug(f"Section coloring of {G.n} vertices uses a palette of {coloring.palette}")
    return coloring
