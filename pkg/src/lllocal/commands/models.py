from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field

from lllocal.config import app_cfg
from lllocal.constants import (
    AlgorithmName,
    CommandName,
    CSPBuilder,
    ExitCode,
    GraphFamily,
    LCLName,
    SolverKind,
    WitnessKind,
)


class RunConfig(BaseModel):
    """Everything one CLI invocation needs; defaults come from app_cfg."""

    command: CommandName
    inputs: list[Path] = Field(default_factory=list, description="Primary input files, in command order.")
    graph: Path | None = Field(default=None, description="Graph or structured graph file.")
    partition: Path | None = Field(default=None, description="Finite partition file for the shattering solver.")
    witness: Path | None = Field(default=None, description="Separation witness file.")

    q: int | None = Field(default=None, ge=1, description="Color count for built CSPs and LCLs.")
    s: int | None = Field(default=None, ge=0, description="Shattering number / separation index.")
    locality: int | None = Field(default=None, ge=1, description="Locality budget L.")
    budget: int = Field(default_factory=lambda: app_cfg.BRUTE_FORCE_BUDGET, ge=1)
    solver: SolverKind = SolverKind.BRUTE
    builder: CSPBuilder | None = Field(default=None, description="Build the CSP from --graph instead of reading one.")

    problem: LCLName | None = None
    algorithm: AlgorithmName | None = None
    rounds: int = Field(default=0, ge=0, description="LOCAL round count T.")
    labels: int | None = Field(default=None, ge=1, description="Label range ℓ.")

    family: GraphFamily | None = None
    size: list[int] = Field(default_factory=list, description="Generator size parameters (n, or width and height).")
    degree: int | None = Field(default=None, ge=0)
    witness_kind: WitnessKind | None = None

    moduli: list[int] = Field(default_factory=list)
    steps: list[str] = Field(default_factory=list, description="Generator steps as comma-separated coordinates.")
    via_sections: bool = False
    k: int | None = Field(default=None, ge=1)
    delta: int | None = Field(default=None, ge=2)

    seed: int = Field(default_factory=lambda: app_cfg.DEFAULT_SEED)
    precision_cap: int = Field(default_factory=lambda: app_cfg.PRECISION_CAP, ge=16)
    trials: int = Field(default_factory=lambda: app_cfg.DEFAULT_TRIALS, ge=1)
    threads: int = Field(default_factory=lambda: app_cfg.MAX_WORKERS, ge=1)
    out: Path | None = None
    dot: bool = False
    timings: bool = False
    log_level: str = Field(default_factory=lambda: app_cfg.LOG_LEVEL)

    def recorded(self) -> dict[str, Any]:
        """Fields echoed into every report."""
        return {"command": self.command.value, "seed": self.seed, "precision_cap": self.precision_cap}


@dataclass
class CommandOutcome:
    exit_code: ExitCode
    report: dict[str, Any]
    summary: str
    artifacts: dict[str, str] = field(default_factory=dict)
