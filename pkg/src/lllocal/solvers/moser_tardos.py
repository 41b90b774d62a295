import logging
import random
from collections import defaultdict
from dataclasses import dataclass
from typing import Any

from lllocal.config import app_cfg
from lllocal.csp.model import CSP, PartialColoring

logger = logging.getLogger(__name__)


@dataclass
class MoserTardosResult:
    coloring: PartialColoring | None
    resamples: int
    violated_at_end: int
    seed: int

    @property
    def solved(self) -> bool:
        return self.coloring is not None

    def as_dict(self) -> dict[str, Any]:
        return {
            "solved": self.solved,
            "resamples": self.resamples,
            "violated_at_end": self.violated_at_end,
            "seed": self.seed,
        }


def moser_tardos(csp: CSP, seed: int, max_resamples: int | None = None) -> MoserTardosResult:
    """
    Resampling solver: start from a uniform coloring and, while some constraint
    is violated, resample the domain of the violated constraint of least index.
    """
    budget = app_cfg.MOSER_TARDOS_MAX_RESAMPLES if max_resamples is None else max_resamples
    rng = random.Random(seed)
    values = {v: rng.randrange(csp.q) for v in csp.universe}
    constraints = csp.constraints

    def is_violated(b: int) -> bool:
        B = constraints[b]
        return B.contains(tuple(values[v] for v in B.domain))

    if any(B.is_always_violated for B in constraints if not B.domain):
        logger.info("CSP contains an always-violated constraint; resampling cannot help")
        violated = sum(1 for b in range(len(constraints)) if is_violated(b))
        return MoserTardosResult(None, 0, violated, seed)

    watchers: dict[int, list[int]] = defaultdict(list)
    for b, B in enumerate(constraints):
        for v in B.domain:
            watchers[v].append(b)
    violated = {b for b in range(len(constraints)) if is_violated(b)}

    resamples = 0
    while violated and resamples < budget:
        b = min(violated)
        for v in constraints[b].domain:
            values[v] = rng.randrange(csp.q)
        resamples += 1
        for v in constraints[b].domain:
            for other in watchers[v]:
                if is_violated(other):
                    violated.add(other)
                else:
                    violated.discard(other)

    if violated:
        logger.warning(f"Moser-Tardos gave up after {resamples} resamples with {len(violated)} violations left")
        return MoserTardosResult(None, resamples, len(violated), seed)
    logger.info(f"Moser-Tardos solved {len(constraints)} constraints with {resamples} resamples")
    return MoserTardosResult(PartialColoring(csp.q, values), resamples, 0, seed)
