"""
Canonical forms of rooted labeled structured balls.

The canonical string is the lexicographically least encoding over all vertex
orderings that respect an isomorphism-invariant color refinement. Vertices
exchangeable by a transposition automorphism are kept in index order, which
never changes the minimum.
"""
import json
import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Sequence

from lllocal.config import app_cfg
from lllocal.exceptions import BudgetExceededError
from lllocal.local.structured import RootedBall

logger = logging.getLogger(__name__)


def _sigma_by_vertex(ball: RootedBall) -> list[list[tuple[tuple[int, ...], int]]]:
    touching: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in range(ball.size)]
    for t, value in ball.sigma.items():
        for x in set(t):
            touching[x].append((t, value))
    return touching


def _ranks(keys: list) -> list[int]:
    order = sorted(set(keys))
    index = {key: r for r, key in enumerate(order)}
    return [index[key] for key in keys]


def refine(ball: RootedBall) -> list[int]:
    """Stable isomorphism-invariant vertex colors (1-dimensional refinement)."""
    touching = _sigma_by_vertex(ball)
    keys = [
        (
            0 if i == ball.root else 1,
            ball.distances[i],
            len(ball.neighbors(i)),
            ball.labels[i],
            tuple(sorted((len(t), tuple(p for p, x in enumerate(t) if x == i), value) for t, value in touching[i])),
        )
        for i in range(ball.size)
    ]
    colors = _ranks(keys)
    while True:
        keys = [
            (
                colors[i],
                tuple(sorted(colors[j] for j in ball.neighbors(i))),
                tuple(sorted((value, tuple(colors[x] for x in t)) for t, value in touching[i])),
            )
            for i in range(ball.size)
        ]
        refined = _ranks(keys)
        if len(set(refined)) == len(set(colors)):
            return refined
        colors = refined


def _encoding(ball: RootedBall, order: Sequence[int]) -> tuple:
    position = {index: p for p, index in enumerate(order)}
    edges = tuple(sorted(tuple(sorted((position[u], position[v]))) for u, v in ball.graph.edges))
    sigma = tuple(sorted((tuple(position[x] for x in t), value) for t, value in ball.sigma.items()))
    labels = tuple(ball.labels[i] for i in order)
    return (ball.size, position[ball.root], labels, edges, sigma)


def _is_transposition_automorphism(ball: RootedBall, a: int, b: int) -> bool:
    if ball.labels[a] != ball.labels[b] or a == ball.root or b == ball.root:
        return False
    swap = {a: b, b: a}
    image = lambda x: swap.get(x, x)  # noqa: E731
    if set(ball.neighbors(a)) - {b} != set(ball.neighbors(b)) - {a}:
        return False
    return all(ball.sigma.get(tuple(image(x) for x in t)) == value for t, value in ball.sigma.items())


def _twin_classes(ball: RootedBall, cell: list[int]) -> list[int]:
    """Twin-class id of each cell member (members of one class are interchangeable)."""
    representatives: list[int] = []
    class_ids = []
    for v in cell:
        for k, rep in enumerate(representatives):
            if _is_transposition_automorphism(ball, rep, v):
                class_ids.append(k)
                break
        else:
            representatives.append(v)
            class_ids.append(len(representatives) - 1)
    return class_ids


def _distinct_permutations(items: list[int]) -> Iterator[tuple[int, ...]]:
    counts: dict[int, int] = {}
    for item in items:
        counts[item] = counts.get(item, 0) + 1
    keys = sorted(counts)
    current: list[int] = []

    def extend() -> Iterator[tuple[int, ...]]:
        if len(current) == len(items):
            yield tuple(current)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                current.append(key)
                yield from extend()
                current.pop()
                counts[key] += 1

    yield from extend()


def _cell_orderings(ball: RootedBall, cell: list[int]) -> list[list[int]]:
    class_ids = _twin_classes(ball, cell)
    members: dict[int, list[int]] = {}
    for v, k in zip(cell, class_ids):
        members.setdefault(k, []).append(v)
    orderings = []
    for pattern in _distinct_permutations(class_ids):
        cursor = {k: 0 for k in members}
        ordering = []
        for k in pattern:
            ordering.append(members[k][cursor[k]])
            cursor[k] += 1
        orderings.append(ordering)
    return orderings


def canonical_order(ball: RootedBall, cap: int | None = None) -> tuple[bytes, list[int]]:
    """Canonical string plus an ordering of the ball indices that realizes it."""
    limit = app_cfg.CANONICAL_FORM_CAP if cap is None else cap
    if ball.size > limit:
        raise BudgetExceededError(
            f"Ball of {ball.size} vertices exceeds the canonical-form cap of {limit}",
            details={"size": ball.size, "cap": limit},
        )
    colors = refine(ball)
    cells = [[i for i in range(ball.size) if colors[i] == c] for c in sorted(set(colors))]
    per_cell = [_cell_orderings(ball, cell) for cell in cells]

    best: tuple | None = None
    best_order: list[int] = []

    def search(k: int, prefix: list[int]) -> None:
        nonlocal best, best_order
        if k == len(per_cell):
            encoding = _encoding(ball, prefix)
            if best is None or encoding < best:
                best, best_order = encoding, list(prefix)
            return
        for ordering in per_cell[k]:
            search(k + 1, prefix + ordering)

    search(0, [])
    return json.dumps(best, separators=(",", ":")).encode(), best_order


def canonical_form(ball: RootedBall, cap: int | None = None) -> bytes:
    return canonical_order(ball, cap)[0]


@dataclass
class InvarianceVerdict:
    ok: bool
    checked: int
    counterexample: dict[str, Any] | None = None


def invariance_test(
    callback: Callable[[RootedBall], Any], balls: Sequence[RootedBall], samples: int, seed: int
) -> InvarianceVerdict:
    """Evaluate `callback` on random relabelings of each ball and compare with the original answer."""
    rng = random.Random(seed)
    checked = 0
    for index, ball in enumerate(balls):
        expected = callback(ball)
        for _ in range(samples):
            permutation = list(range(ball.size))
            rng.shuffle(permutation)
            observed = callback(ball.relabeled(permutation))
            checked += 1
            if observed != expected:
                logger.warning(f"Invariance broken on ball {index}: {expected} vs {observed}")
                return InvarianceVerdict(
                    False,
                    checked,
                    {"ball": index, "permutation": permutation, "expected": expected, "observed": observed},
                )
    return InvarianceVerdict(True, checked)
