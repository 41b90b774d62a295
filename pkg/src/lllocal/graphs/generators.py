import logging
import random
from collections import defaultdict
from itertools import combinations
from typing import Sequence

from lllocal.exceptions import InvalidInputError
from lllocal.graphs.core import Graph

logger = logging.getLogger(__name__)

RANDOM_REGULAR_ATTEMPTS = 100


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError(f"A simple cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid(w: int, h: int) -> Graph:
    """w x h grid; vertex (x, y) has id y*w + x."""
    if w < 1 or h < 1:
        raise InvalidInputError(f"Grid dimensions must be positive, got {w}x{h}")
    edges = []
    for y in range(h):
        for x in range(w):
            v = y * w + x
            if x + 1 < w:
                edges.append((v, v + 1))
            if y + 1 < h:
                edges.append((v, v + w))
    return Graph.from_edges(w * h, edges)


def _pair_points(n: int, d: int, rng: random.Random) -> set[tuple[int, int]] | None:
    """One pairing pass; conflicting points are re-paired until none remain or no pairing is possible."""
    edges: set[tuple[int, int]] = set()
    points = [v for v in range(n) for _ in range(d)]
    while points:
        leftover: dict[int, int] = defaultdict(int)
        rng.shuffle(points)
        for u, v in zip(points[::2], points[1::2]):
            u, v = min(u, v), max(u, v)
            if u != v and (u, v) not in edges:
                edges.add((u, v))
            else:
                leftover[u] += 1
                leftover[v] += 1
        if leftover and not any(
            (min(u, v), max(u, v)) not in edges for u, v in combinations(leftover, 2)
        ):
            return None
        points = [v for v, count in leftover.items() for _ in range(count)]
    return edges


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Random d-regular simple graph by repeated pairing of the conflicting points."""
    if d < 0 or d >= n or (n * d) % 2:
        raise InvalidInputError(f"No simple {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for attempt in range(RANDOM_REGULAR_ATTEMPTS):
        edges = _pair_points(n, d, rng)
        if edges is not None:
            logger.debug(f"random_regular({n}, {d}) succeeded after {attempt + 1} pairings")
            return Graph.from_edges(n, sorted(edges))
    raise InvalidInputError(f"Could not pair a simple {d}-regular graph on {n} vertices")


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(v, rng.randrange(v)) for v in range(1, n)])


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_probability]
    )


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union with vertex blocks laid out in list order."""
    edges = []
    offset = 0
    for graph in graphs:
        edges.extend((u + offset, v + offset) for u, v in graph.edges)
        offset += graph.n
    return Graph.from_edges(offset, edges)


def grid_dimensions(G: Graph) -> tuple[int, int]:
    """Recover (w, h) of a graph produced by `grid`, rejecting anything else."""
    if G.n == 0:
        raise InvalidInputError("Empty graph is not a grid")
    if G.n == 1:
        return 1, 1
    first = G.neighbors(0)
    if len(first) == 1:
        candidates = [(G.n, 1)] if first[0] == 1 else [(1, G.n)]
    elif len(first) == 2 and first[0] == 1 and G.n % first[1] == 0:
        candidates = [(first[1], G.n // first[1])]
    else:
        raise InvalidInputError("Graph is not a grid: unexpected neighborhood of vertex 0")
    for w, h in candidates:
        if grid(w, h) == G:
            return w, h
    raise InvalidInputError("Graph is not a grid")
