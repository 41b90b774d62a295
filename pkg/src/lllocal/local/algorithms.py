"""
Built-in LOCAL algorithms. Each one is a function of the rooted labeled ball
alone; labels play the role of identifiers or random bits.
"""
from lllocal.local.problems import EDGE_NODE, LocalAlgorithm, node_kind
from lllocal.local.structured import RootedBall

UNDECIDED, IN_SET, OUT_OF_SET = 0, 1, 2


def constant(value: int = 0) -> LocalAlgorithm:
    return LocalAlgorithm(f"constant-{value}", lambda ball: value, 0)


def own_label() -> LocalAlgorithm:
    """One-round uniform color trial: output the root's own (random) label as its color."""
    return LocalAlgorithm("own-label", lambda ball: ball.root_label, 0)


def greedy_by_id(rounds: int) -> LocalAlgorithm:
    """
    (Δ+1)-coloring by simulating sequential greedy coloring in increasing
    label order over the whole view. Correct once the view covers the
    component; labels must be distinct.
    """

    def evaluate(ball: RootedBall) -> int:
        order = sorted(range(ball.size), key=lambda i: (ball.labels[i], ball.distances[i]))
        colors: dict[int, int] = {}
        for i in order:
            taken = {colors[j] for j in ball.neighbors(i) if j in colors}
            colors[i] = next(c for c in range(len(taken) + 1) if c not in taken)
        return colors[ball.root]

    return LocalAlgorithm("greedy-by-id", evaluate, rounds)


def luby_mis_round() -> LocalAlgorithm:
    """Join the independent set iff the root's label beats every neighbor's label."""

    def evaluate(ball: RootedBall) -> int:
        own = ball.root_label
        return int(all(ball.labels[u] < own for u in ball.neighbors(ball.root)))

    return LocalAlgorithm("luby-mis-round", evaluate, 1)


def luby_mis(phases: int) -> LocalAlgorithm:
    """
    `phases` rounds of Luby-style local-maximum selection with fixed labels.

    Undecided vertices whose label beats all undecided neighbors join; their
    undecided neighbors drop out. Output 1 for members, 0 otherwise. The
    root's answer is exact with a view of radius 2·phases - 1.
    """

    def evaluate(ball: RootedBall) -> int:
        state = [UNDECIDED] * ball.size
        for _ in range(phases):
            joining = [
                i
                for i in range(ball.size)
                if state[i] == UNDECIDED
                and all(state[j] != UNDECIDED or ball.labels[j] < ball.labels[i] for j in ball.neighbors(i))
            ]
            for i in joining:
                state[i] = IN_SET
            for i in joining:
                for j in ball.neighbors(i):
                    if state[j] == UNDECIDED:
                        state[j] = OUT_OF_SET
        return int(state[ball.root] == IN_SET)

    return LocalAlgorithm(f"luby-mis-{phases}", evaluate, 2 * phases - 1)


def sinkless_orientation_trial() -> LocalAlgorithm:
    """
    Random orientation on the vertex-edge incidence graph.

    Vertex nodes output their own label as a name. An edge node points at the
    endpoint with the larger label when its own label is odd and at the
    smaller one otherwise, and outputs that endpoint's label.
    """

    def evaluate(ball: RootedBall) -> int:
        root = ball.root
        if node_kind(ball, root) != EDGE_NODE:
            return ball.root_label
        names = sorted(ball.labels[x] for x in ball.neighbors(root))
        if not names:
            return 0
        return names[-1] if ball.root_label % 2 else names[0]

    return LocalAlgorithm("sinkless-orientation-trial", evaluate, 1)
