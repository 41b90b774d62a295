import logging
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from lllocal.exceptions import AuditError, BudgetExceededError
from lllocal.graphs.core import Graph, line_graph, max_degree
from lllocal.local.problems import edge_coloring_lcl
from lllocal.local.runner import check_lcl
from lllocal.local.structured import vertex_edge_incidence

logger = logging.getLogger(__name__)

CHROMATIC_INDEX_EDGE_CAP = 60


@dataclass
class EdgeColoringCheck:
    ok: bool
    palette: int
    vizing_bound: int
    conflicts: list[tuple[int, int]] = field(default_factory=list)
    uncolored: list[int] = field(default_factory=list)

    def as_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "palette": self.palette,
            "vizing_bound": self.vizing_bound,
            "conflicts": [list(pair) for pair in self.conflicts],
            "uncolored": self.uncolored,
        }


def _lookup(colors: Mapping[int, int] | Sequence[int]) -> dict[int, int]:
    return dict(enumerate(colors)) if isinstance(colors, Sequence) else dict(colors)


def verify_edge_coloring(G: Graph, colors: Mapping[int, int] | Sequence[int]) -> EdgeColoringCheck:
    """Edges sharing an endpoint must get different colors; conflicts are reported as edge-index pairs."""
    lookup = _lookup(colors)
    uncolored = [e for e in range(G.m) if e not in lookup]
    conflicts = []
    for v in G.vertices():
        incident = [e for e in G.incident_edges(v) if e in lookup]
        for i, e in enumerate(incident):
            for other in incident[i + 1 :]:
                if lookup[e] == lookup[other]:
                    conflicts.append((e, other))
    palette = len({lookup[e] for e in range(G.m) if e in lookup})
    return EdgeColoringCheck(not conflicts and not uncolored, palette, max_degree(G) + 1, conflicts, uncolored)


def verify_edge_coloring_as_lcl(G: Graph, colors: Mapping[int, int] | Sequence[int], q: int) -> bool:
    """Same check through the radius-2 LCL on the vertex-edge incidence graph."""
    lookup = _lookup(colors)
    labels = [0] * G.n + [lookup[e] for e in range(G.m)]
    return check_lcl(edge_coloring_lcl(q), vertex_edge_incidence(G), labels).ok


def _colorable(L: Graph, q: int) -> bool:
    """DSatur-style backtracking: always branch on the uncolored vertex with the most distinct neighbor colors."""
    colors: dict[int, int] = {}

    def pick() -> int:
        return max(
            (v for v in L.vertices() if v not in colors),
            key=lambda v: (len({colors[u] for u in L.neighbors(v) if u in colors}), L.degree(v), -v),
        )

    def search() -> bool:
        if len(colors) == L.n:
            return True
        v = pick()
        taken = {colors[u] for u in L.neighbors(v) if u in colors}
        # colors above the largest used one are interchangeable
        fresh = max(colors.values(), default=-1) + 1
        for c in range(min(q, fresh + 1)):
            if c in taken:
                continue
            colors[v] = c
            if search():
                return True
            del colors[v]
        return False

    return search()


def chromatic_index_brute_force(G: Graph, cap: int = CHROMATIC_INDEX_EDGE_CAP) -> int:
    """χ′(G), which is Δ or Δ + 1."""
    if G.m > cap:
        raise BudgetExceededError(f"Exact chromatic index is limited to {cap} edges, got {G.m}")
    delta = max_degree(G)
    if G.m == 0:
        return 0
    L, _ = line_graph(G)
    return delta if _colorable(L, delta) else delta + 1


def vizing_edge_coloring(G: Graph) -> dict[int, int]:
    """
    Proper edge coloring with at most Δ + 1 colors, edge by edge.

    An edge uv with no color free at both ends is fixed by building a
    maximal fan at u, inverting the cd-path through u (c free at u, d free
    at the fan's tip) and rotating the fan prefix that ends where d is free.
    """
    q = max_degree(G) + 1
    color: dict[tuple[int, int], int] = {}
    at: list[dict[int, int]] = [{} for _ in G.vertices()]  # at[x][c] is the c-neighbor of x

    def key(x: int, y: int) -> tuple[int, int]:
        return (x, y) if x < y else (y, x)

    def paint(x: int, y: int, c: int | None) -> None:
        old = color.pop(key(x, y), None)
        if old is not None:
            del at[x][old], at[y][old]
        if c is not None:
            color[key(x, y)] = c
            at[x][c] = y
            at[y][c] = x

    def free(x: int) -> int:
        return next(c for c in range(q) if c not in at[x])

    for u, v in G.edges:
        shared = next((c for c in range(q) if c not in at[u] and c not in at[v]), None)
        if shared is not None:
            paint(u, v, shared)
            continue

        fan, members = [v], {v}
        while True:
            tip = fan[-1]
            step = next(
                (w for w in G.neighbors(u) if w not in members and key(u, w) in color and color[key(u, w)] not in at[tip]),
                None,
            )
            if step is None:
                break
            fan.append(step)
            members.add(step)

        c, d = free(u), free(fan[-1])
        walk, x, want = [], u, d
        while want in at[x]:
            y = at[x][want]
            walk.append((x, y, want))
            x, want = y, (c if want == d else d)
        for x, y, _ in walk:
            paint(x, y, None)
        for x, y, old in walk:
            paint(x, y, c if old == d else d)

        pivot = None
        for i, w in enumerate(fan):
            if i and color[key(u, w)] in at[fan[i - 1]]:
                break
            if d not in at[w]:
                pivot = i
                break
        if pivot is None:
            raise AuditError(f"Fan at vertex {u} has no rotation point for color {d}")
        for j in range(pivot):
            shifted = color[key(u, fan[j + 1])]
            paint(u, fan[j + 1], None)
            paint(u, fan[j], shifted)
        paint(u, fan[pivot], d)

    logger.debug(f"Colored {G.m} edges with at most {q} colors")
    return {G.edge_index(x, y): c for (x, y), c in color.items()}
