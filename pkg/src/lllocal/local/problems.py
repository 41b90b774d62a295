"""
LCL problems: a radius R and an accept/reject predicate on rooted labeled
balls. Every built-in verifier reads only the ball, never original ids.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from lllocal.local.structured import RootedBall

logger = logging.getLogger(__name__)

VERTEX_NODE = 0
EDGE_NODE = 1


@dataclass(frozen=True)
class LCLProblem:
    name: str
    radius: int
    verifier: Callable[[RootedBall], bool]

    def __call__(self, ball: RootedBall) -> bool:
        return bool(self.verifier(ball))


@dataclass(frozen=True)
class LocalAlgorithm:
    name: str
    evaluate: Callable[[RootedBall], int]
    rounds: int = 0

    def __call__(self, ball: RootedBall) -> int:
        return int(self.evaluate(ball))


def always_true_lcl(radius: int = 0) -> LCLProblem:
    return LCLProblem("always-true", radius, lambda ball: True)


def proper_coloring_lcl(q: int) -> LCLProblem:
    def verify(ball: RootedBall) -> bool:
        color = ball.root_label
        return color < q and all(ball.labels[u] != color for u in ball.neighbors(ball.root))

    return LCLProblem(f"proper-{q}-coloring", 1, verify)


def distinct_label_lcl() -> LCLProblem:
    """Root label differs from every neighbor label (no bound on the label range)."""

    def verify(ball: RootedBall) -> bool:
        return all(ball.labels[u] != ball.root_label for u in ball.neighbors(ball.root))

    return LCLProblem("distinct-label", 1, verify)


def non_monochromatic_lcl() -> LCLProblem:
    """Rejects a vertex only when its whole 1-ball carries a single label (isolated vertices pass)."""

    def verify(ball: RootedBall) -> bool:
        neighbors = ball.neighbors(ball.root)
        return not neighbors or any(ball.labels[u] != ball.root_label for u in neighbors)

    return LCLProblem("non-monochromatic", 1, verify)


def mis_lcl() -> LCLProblem:
    def verify(ball: RootedBall) -> bool:
        own = ball.root_label
        around = [ball.labels[u] for u in ball.neighbors(ball.root)]
        if own == 1:
            return all(label == 0 for label in around)
        return own == 0 and any(label == 1 for label in around)

    return LCLProblem("maximal-independent-set", 1, verify)


def sinkless_orientation_lcl() -> LCLProblem:
    """Input-orientation check on a `directed` structured graph: the root has an outgoing arc."""

    def verify(ball: RootedBall) -> bool:
        return any(ball.sigma.get((ball.root, u)) == 1 for u in ball.neighbors(ball.root))

    return LCLProblem("sinkless-orientation", 1, verify)


def node_kind(ball: RootedBall, i: int) -> int | None:
    return ball.sigma.get((i,))


def incidence_sinkless_lcl() -> LCLProblem:
    """
    Sinkless orientation as a labeling of the vertex-edge incidence graph.

    Vertex nodes output a name, edge nodes output the name of their head.
    At a vertex node: each incident edge names one of its two endpoints, the
    two endpoint names differ, and at least one incident edge points away.
    """

    def verify(ball: RootedBall) -> bool:
        root = ball.root
        if node_kind(ball, root) != VERTEX_NODE:
            return True
        own = ball.root_label
        has_out_edge = False
        for e in ball.neighbors(root):
            ends = ball.neighbors(e)
            if len(ends) != 2:
                return False
            names = {ball.labels[x] for x in ends}
            if len(names) != 2 or ball.labels[e] not in names:
                return False
            if ball.labels[e] != own:
                has_out_edge = True
        return has_out_edge

    return LCLProblem("incidence-sinkless-orientation", 2, verify)


def edge_coloring_lcl(q: int) -> LCLProblem:
    """Proper q-edge-coloring on the vertex-edge incidence graph: edge nodes sharing an endpoint differ."""

    def verify(ball: RootedBall) -> bool:
        root = ball.root
        if node_kind(ball, root) != EDGE_NODE:
            return True
        color = ball.root_label
        if color >= q:
            return False
        for x in ball.neighbors(root):
            for other in ball.neighbors(x):
                if other != root and node_kind(ball, other) == EDGE_NODE and ball.labels[other] == color:
                    return False
        return True

    return LCLProblem(f"edge-{q}-coloring", 2, verify)


def graph_csp_lcl(q: int, codes: Mapping[int, Sequence[frozenset]]) -> LCLProblem:
    """
    Solving an encoded graph-CSP as a radius-1 LCL.

    `codes` maps a σ value to its type: the forbidden-tuple sets of the
    constraints on that vertex tuple, positionally aligned with the tuple.
    """

    def verify(ball: RootedBall) -> bool:
        root = ball.root
        if ball.root_label >= q:
            return False
        for t, code in ball.sigma.items():
            if t and root not in t:
                continue
            values = tuple(ball.labels[x] for x in t)
            if any(values in forbidden for forbidden in codes.get(code, ())):
                return False
        return True

    return LCLProblem(f"graph-csp-{q}", 1, verify)
