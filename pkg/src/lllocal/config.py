from typing import Annotated

from pydantic import field_validator
from pydantic_settings import BaseSettings, NoDecode


class SolverConfig(BaseSettings):
    # Application Configuration
    APP_NAME: str = "lllocal"
    LOG_LEVEL: str = "INFO"

    # Exhaustive search limits
    BRUTE_FORCE_BUDGET: int = 20
    ENUMERATION_CAP: int = 1_000_000
    CANONICAL_FORM_CAP: int = 12
    EXACT_ENUMERATION_CAP: int = 100_000

    # Interval arithmetic (bits)
    PRECISION_LADDER: Annotated[list[int], NoDecode] = [64, 256, 1024]
    PRECISION_CAP: int = 1024

    # Randomness and sampling
    DEFAULT_SEED: int = 0
    DEFAULT_TRIALS: int = 1000
    MOSER_TARDOS_MAX_RESAMPLES: int = 100_000

    # Worker pool size for per-component / per-vertex work
    MAX_WORKERS: int = 1

    # Langfuse Tracing Configuration
    LANGFUSE_TRACING_ENABLED: bool = False
    LANGFUSE_SECRET_KEY: str = ""
    LANGFUSE_PUBLIC_KEY: str = ""
    LANGFUSE_BASE_URL: str = "http://localhost:3000"

    @field_validator("LANGFUSE_TRACING_ENABLED", mode="before")
    def convert_tracing_flag(cls, value):
        if isinstance(value, str):
            if value.lower() == "true":
                return True
            elif value.lower() == "false":
                return False
        return value

    @field_validator("PRECISION_LADDER", mode="before")
    def parse_precision_ladder(cls, value):
        if isinstance(value, str):
            return [int(bits) for bits in value.strip().strip("[]").split(",") if bits.strip()]
        return value

    @field_validator("PRECISION_LADDER")
    def check_precision_ladder(cls, value: list[int]) -> list[int]:
        if not value or any(bits < 16 for bits in value):
            raise ValueError("PRECISION_LADDER needs at least one entry of 16 bits or more")
        return sorted(value)

    def precision_steps(self, cap: int | None = None) -> list[int]:
        """Precision ladder truncated at `cap` (defaults to PRECISION_CAP)."""
        limit = self.PRECISION_CAP if cap is None else cap
        steps = [bits for bits in self.PRECISION_LADDER if bits <= limit]
        return steps or [limit]

    class Config:
        case_sensitive = True
        extra = "allow"


app_cfg = SolverConfig(_env_file=".env")
