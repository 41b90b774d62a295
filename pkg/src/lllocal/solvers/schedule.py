import logging
from dataclasses import dataclass

from lllocal.csp.model import CSP
from lllocal.exceptions import AuditError, InvalidInputError
from lllocal.graphs.core import Graph, VertexSet
from lllocal.shattering.partitions import FinitePartition, shattering_width

logger = logging.getLogger(__name__)


def class_conflict_graph(partition: FinitePartition, csp: CSP) -> Graph:
    """Graph on class indices; two classes are adjacent when one constraint domain meets both."""
    partition.require_cover(csp.universe)
    class_of = partition.class_of
    edges = set()
    for B in csp.constraints:
        met = sorted({class_of[v] for v in B.domain})
        for i, a in enumerate(met):
            for b in met[i + 1:]:
                edges.add((a, b))
    return Graph.from_edges(len(partition), edges)


@dataclass(frozen=True)
class RoundSchedule:
    """
    Rounds of classes processed by the shattering solver.

    `meets[b]` lists, in increasing order, the rounds whose vertex set meets
    the domain of constraint b.
    """

    s: int
    class_rounds: tuple[int, ...]
    rounds: tuple[VertexSet, ...]
    round_classes: tuple[tuple[int, ...], ...]
    meets: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.rounds)

    def t(self, n: int, b: int) -> int:
        """t_n(B): rounds before n that meet dom(B)."""
        return sum(1 for r in self.meets[b] if r < n)

    def s_n(self, n: int, b: int) -> int:
        return self.s - self.t(n, b)

    def eta(self, n: int, b: int) -> int:
        return 1 if n in self.meets[b] else 0


def greedy_schedule(H: Graph, partition: FinitePartition, csp: CSP, s: int) -> RoundSchedule:
    """Greedy proper coloring of H in class order; color r becomes round r."""
    width = shattering_width(partition, csp)
    if s < width:
        raise InvalidInputError(f"s = {s} is smaller than the partition's shattering width {width}")
    colors: list[int] = []
    for k in H.vertices():
        taken = {colors[j] for j in H.neighbors(k) if j < k}
        colors.append(next(c for c in range(len(taken) + 1) if c not in taken))
    round_count = max(colors, default=-1) + 1
    round_classes = tuple(tuple(k for k in H.vertices() if colors[k] == r) for r in range(round_count))
    rounds = tuple(tuple(sorted(v for k in members for v in partition.classes[k])) for members in round_classes)

    class_of = partition.class_of
    meets = []
    for b, B in enumerate(csp.constraints):
        met = sorted({colors[class_of[v]] for v in B.domain})
        if len(met) > s:
            raise AuditError(f"Constraint {b} meets {len(met)} rounds but s = {s}")
        meets.append(tuple(met))
    logger.info(f"Scheduled {len(partition)} classes into {round_count} rounds")
    return RoundSchedule(s, tuple(colors), rounds, round_classes, tuple(meets))
