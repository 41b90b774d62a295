import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable

from pydantic import BaseModel, Field

from lllocal.constants import DEFAULT_REPORT_INDENT
from lllocal.csp.model import CSP
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.core import VertexSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FinitePartition:
    """Disjoint nonempty classes, kept sorted by minimum id."""

    classes: tuple[VertexSet, ...]

    def __post_init__(self):
        classes = tuple(sorted((tuple(sorted(set(c))) for c in self.classes), key=lambda c: c[0] if c else -1))
        seen: set[int] = set()
        for c in classes:
            if not c:
                raise InvalidInputError("Partition classes must be nonempty")
            if seen.intersection(c):
                raise InvalidInputError(f"Partition classes overlap on {sorted(seen.intersection(c))[:5]}")
            seen.update(c)
        object.__setattr__(self, "classes", classes)

    @classmethod
    def singletons(cls, ids: Iterable[int]) -> "FinitePartition":
        return cls(tuple((v,) for v in ids))

    @classmethod
    def single_class(cls, ids: Iterable[int]) -> "FinitePartition":
        ids = tuple(ids)
        return cls((ids,) if ids else ())

    @cached_property
    def class_of(self) -> dict[int, int]:
        return {v: k for k, c in enumerate(self.classes) for v in c}

    def __len__(self) -> int:
        return len(self.classes)

    def largest_class(self) -> int:
        return max((len(c) for c in self.classes), default=0)

    def covers(self, universe: Iterable[int]) -> bool:
        return set(universe) == set(self.class_of)

    def require_cover(self, universe: Iterable[int]) -> None:
        universe = set(universe)
        missing = universe - set(self.class_of)
        if missing:
            raise InvalidInputError(f"Partition does not cover variables {sorted(missing)[:5]}")


def shattering_width(partition: FinitePartition, csp: CSP) -> int:
    """Maximum number of classes any constraint domain meets."""
    partition.require_cover(csp.universe)
    class_of = partition.class_of
    return max((len({class_of[v] for v in B.domain}) for B in csp.constraints), default=0)


class PartitionModel(BaseModel):
    classes: list[list[int]] = Field(description="Partition classes as vertex id lists.", examples=[[[0, 1], [2]]])

    @classmethod
    def from_partition(cls, partition: FinitePartition) -> "PartitionModel":
        return cls(classes=[list(c) for c in partition.classes])

    def to_partition(self) -> FinitePartition:
        return FinitePartition(tuple(tuple(c) for c in self.classes))


def load_partition(path: str | Path) -> FinitePartition:
    try:
        return PartitionModel.model_validate_json(Path(path).read_text()).to_partition()
    except ValueError as e:
        raise InvalidInputError(f"Invalid partition file {path}: {e}") from e


def dump_partition(partition: FinitePartition, path: str | Path) -> None:
    Path(path).write_text(PartitionModel.from_partition(partition).model_dump_json(indent=DEFAULT_REPORT_INDENT))
