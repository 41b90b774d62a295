from pathlib import Path

from pydantic import BaseModel, Field

from lllocal.constants import DEFAULT_REPORT_INDENT
from lllocal.csp.model import CSP, Constraint, PartialColoring
from lllocal.exceptions import InvalidInputError


class ConstraintModel(BaseModel):
    domain: list[int] = Field(description="Ordered variable ids of the constraint domain.", examples=[[0, 1]])
    forbidden: list[list[int]] = Field(
        default_factory=list,
        description="Forbidden total assignments, positionally aligned with `domain`.",
        examples=[[[0, 0], [1, 1]]],
    )


class CSPModel(BaseModel):
    """JSON form of a CSP; lazy constraints are materialized on export."""

    q: int = Field(ge=1, description="Shared color count.", examples=[3])
    universe: int | list[int] = Field(
        description="Variable universe: a count n meaning ids 0..n-1, or an explicit id list.",
        examples=[5],
    )
    constraints: list[ConstraintModel] = Field(default_factory=list)

    @classmethod
    def from_csp(cls, csp: CSP) -> "CSPModel":
        universe: int | list[int] = list(csp.universe)
        if csp.universe == tuple(range(len(csp.universe))):
            universe = len(csp.universe)
        return cls(
            q=csp.q,
            universe=universe,
            constraints=[
                ConstraintModel(domain=list(B.domain), forbidden=sorted(list(t) for t in B.materialize().forbidden))
                for B in csp.constraints
            ],
        )

    def to_csp(self) -> CSP:
        universe = tuple(range(self.universe)) if isinstance(self.universe, int) else tuple(self.universe)
        constraints = tuple(
            Constraint(tuple(c.domain), frozenset(tuple(t) for t in c.forbidden), self.q) for c in self.constraints
        )
        return CSP(universe, self.q, constraints)


class ColoringModel(BaseModel):
    """A total coloring written as a dense label list over the universe order."""

    q: int = Field(ge=1, description="Color count.")
    universe: list[int] = Field(description="Variable ids in the order of `labels`.")
    labels: list[int] = Field(description="Color of each variable.")

    @classmethod
    def from_coloring(cls, f: PartialColoring, universe: tuple[int, ...]) -> "ColoringModel":
        return cls(q=f.q, universe=list(universe), labels=f.as_list(universe))

    def to_coloring(self) -> PartialColoring:
        if len(self.universe) != len(self.labels):
            raise InvalidInputError("Coloring universe and labels differ in length")
        return PartialColoring(self.q, dict(zip(self.universe, self.labels)))


def load_csp(path: str | Path) -> CSP:
    try:
        return CSPModel.model_validate_json(Path(path).read_text()).to_csp()
    except ValueError as e:
        raise InvalidInputError(f"Invalid CSP file {path}: {e}") from e


def dump_csp(csp: CSP, path: str | Path) -> None:
    Path(path).write_text(CSPModel.from_csp(csp).model_dump_json(indent=DEFAULT_REPORT_INDENT))
