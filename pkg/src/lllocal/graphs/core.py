"""
Finite simple undirected graphs over dense integer ids and the operators used
throughout the package: balls, powers, induced subgraphs, line graphs and
connected components.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from lllocal.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

VertexSet = tuple[int, ...]


@dataclass(frozen=True, order=True)
class EdgeId:
    """Canonical edge (u < v) together with its dense index in the edge list."""

    u: int
    v: int
    index: int

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)


class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.

    Neighbor lists are sorted; edges are stored as canonical pairs (u < v)
    in lexicographic order, which fixes the EdgeId indices.
    """

    __slots__ = ("_n", "_adj", "_edges", "_edge_index")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 0:
            raise InvalidInputError(f"Vertex count must be non-negative, got {n}")
        if len(adjacency) != n:
            raise InvalidInputError(f"Adjacency has {len(adjacency)} rows for {n} vertices")
        adj = []
        for v, row in enumerate(adjacency):
            neighbors = tuple(sorted(row))
            if len(set(neighbors)) != len(neighbors):
                raise InvalidInputError(f"Duplicate neighbor in adjacency of vertex {v}")
            for u in neighbors:
                if not 0 <= u < n:
                    raise InvalidInputError(f"Neighbor id {u} of vertex {v} is out of range")
                if u == v:
                    raise InvalidInputError(f"Self-loop at vertex {v}")
            adj.append(neighbors)
        for v, neighbors in enumerate(adj):
            for u in neighbors:
                if v not in adj[u]:
                    raise InvalidInputError(f"Adjacency is not symmetric for edge ({v}, {u})")
        self._n = n
        self._adj = tuple(adj)
        self._edges = tuple((v, u) for v in range(n) for u in adj[v] if v < u)
        self._edge_index = {edge: i for i, edge in enumerate(self._edges)}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; repeated edges collapse, self-loops are rejected."""
        adjacency: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InvalidInputError(f"Self-loop at vertex {u}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n, adjacency)

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, [() for _ in range(n)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_index(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        if key not in self._edge_index:
            raise InvalidInputError(f"({u}, {v}) is not an edge")
        return self._edge_index[key]

    def edge_ids(self) -> list[EdgeId]:
        return [EdgeId(u, v, i) for i, (u, v) in enumerate(self._edges)]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Indices of the edges containing v, in increasing order."""
        return tuple(sorted(self.edge_index(v, u) for u in self.neighbors(v)))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise InvalidInputError(f"Vertex id {v} is out of range for a graph on {self._n} vertices")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={len(self._edges)})"


def distances_from(G: Graph, v: int, limit: int | None = None) -> dict[int, int]:
    """BFS distances from v, stopping at `limit` when given."""
    G._check_vertex(v)
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        if limit is not None and dist[x] >= limit:
            continue
        for y in G.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def ball(G: Graph, v: int, R: int) -> VertexSet:
    """B_G(v, R): all vertices joined to v by a path of at most R edges."""
    if R < 0:
        raise InvalidInputError(f"Radius must be non-negative, got {R}")
    return tuple(sorted(distances_from(G, v, R)))


def power_graph(G: Graph, R: int) -> Graph:
    if R < 1:
        raise InvalidInputError(f"Power must be at least 1, got {R}")
    if R == 1:
        return G
    adjacency = [[u for u in distances_from(G, v, R) if u != v] for v in G.vertices()]
    return Graph(G.n, adjacency)


def induced_subgraph(G: Graph, U: Iterable[int]) -> tuple[Graph, list[int], dict[int, int]]:
    """
    Induced subgraph G[U], re-indexed densely in increasing id order.

    Returns the graph, the new->old id list and the old->new id map.
    """
    old_ids = sorted(set(U))
    for v in old_ids:
        G._check_vertex(v)
    new_id = {old: new for new, old in enumerate(old_ids)}
    adjacency = [[new_id[u] for u in G.neighbors(old) if u in new_id] for old in old_ids]
    return Graph(len(old_ids), adjacency), old_ids, new_id


def line_graph(G: Graph) -> tuple[Graph, list[EdgeId]]:
    edge_ids = G.edge_ids()
    adjacency: list[set[int]] = [set() for _ in edge_ids]
    for v in G.vertices():
        incident = G.incident_edges(v)
        for i in incident:
            adjacency[i].update(j for j in incident if j != i)
    return Graph(len(edge_ids), adjacency), edge_ids


def components(G: Graph, within: Iterable[int] | None = None) -> list[VertexSet]:
    """
    Connected components ordered by minimum vertex id.

    With `within`, components of the induced subgraph on that vertex set.
    """
    allowed = set(G.vertices()) if within is None else set(within)
    seen: set[int] = set()
    result = []
    for start in sorted(allowed):
        if start in seen:
            continue
        seen.add(start)
        component = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in G.neighbors(x):
                if y in allowed and y not in seen:
                    seen.add(y)
                    component.append(y)
                    queue.append(y)
        result.append(tuple(sorted(component)))
    return result


def max_degree(G: Graph, within: Iterable[int] | None = None) -> int:
    if within is None:
        return max((G.degree(v) for v in G.vertices()), default=0)
    allowed = set(within)
    return max((sum(1 for u in G.neighbors(v) if u in allowed) for v in allowed), default=0)


def is_independent(G: Graph, S: Iterable[int]) -> bool:
    members = set(S)
    return all(u not in members for v in members for u in G.neighbors(v))
