import logging

from lllocal.config import app_cfg
from lllocal.csp.algebra import dependency_graph
from lllocal.csp.model import CSP, AnyConstraint, PartialColoring
from lllocal.exceptions import BudgetExceededError
from lllocal.graphs.core import components
from lllocal.utils.concurrency import ordered_map

logger = logging.getLogger(__name__)


def _solve_component(
    variables: tuple[int, ...], constraints: list[AnyConstraint], q: int
) -> dict[int, int] | None:
    """Lexicographically first solution of one component, checking each constraint once its domain is filled."""
    position = {v: i for i, v in enumerate(variables)}
    # constraints checked at the position of their last variable
    triggered: list[list[AnyConstraint]] = [[] for _ in variables]
    for B in constraints:
        triggered[max(position[v] for v in B.domain)].append(B)

    values = [0] * len(variables)

    def consistent(i: int) -> bool:
        return not any(B.contains(tuple(values[position[v]] for v in B.domain)) for B in triggered[i])

    def search(i: int) -> bool:
        if i == len(variables):
            return True
        for color in range(q):
            values[i] = color
            if consistent(i) and search(i + 1):
                return True
        return False

    if not search(0):
        return None
    return dict(zip(variables, values))


def brute_force_solve(
    csp: CSP, budget: int | None = None, max_workers: int | None = None
) -> PartialColoring | None:
    """
    Solve a CSP by exhaustive search on each component of its dependency graph.

    Returns a total coloring of the universe, or None when some component is
    unsatisfiable. Refuses components larger than `budget` variables.
    """
    limit = app_cfg.BRUTE_FORCE_BUDGET if budget is None else budget
    if any(B.is_always_violated for B in csp.constraints if not B.domain):
        logger.info("CSP contains an always-violated constraint; no solution")
        return None

    parts = components(dependency_graph(csp), within=csp.universe)
    largest = max((len(part) for part in parts), default=0)
    if largest > limit:
        raise BudgetExceededError(
            f"Dependency-graph component of {largest} variables exceeds the brute-force budget of {limit}",
            details={"component_size": largest, "budget": limit},
        )

    owner = {v: k for k, part in enumerate(parts) for v in part}
    grouped: list[list[AnyConstraint]] = [[] for _ in parts]
    for B in csp.constraints:
        if B.domain:
            grouped[owner[B.domain[0]]].append(B)

    logger.debug(f"Brute force over {len(parts)} components (largest {largest})")
    solutions = ordered_map(
        lambda k: _solve_component(parts[k], grouped[k], csp.q), range(len(parts)), max_workers
    )
    if any(solution is None for solution in solutions):
        return None
    merged: dict[int, int] = {}
    for solution in solutions:
        merged.update(solution)
    return PartialColoring(csp.q, merged)
