import pytest
from pydantic import ValidationError

from lllocal.config import SolverConfig


def test_defaults():
    cfg = SolverConfig()
    assert cfg.PRECISION_LADDER == [64, 256, 1024]
    assert cfg.BRUTE_FORCE_BUDGET == 20
    assert cfg.LANGFUSE_TRACING_ENABLED is False


def test_precision_steps_truncate_at_the_cap():
    cfg = SolverConfig()
    assert cfg.precision_steps() == [64, 256, 1024]
    assert cfg.precision_steps(256) == [64, 256]
    assert cfg.precision_steps(32) == [32]


def test_ladder_from_the_environment(monkeypatch):
    monkeypatch.setenv("PRECISION_LADDER", "1024,64")
    monkeypatch.setenv("LANGFUSE_TRACING_ENABLED", "TRUE")
    cfg = SolverConfig()
    assert cfg.PRECISION_LADDER == [64, 1024]
    assert cfg.LANGFUSE_TRACING_ENABLED is True


def test_bracketed_ladder():
    assert SolverConfig(PRECISION_LADDER="[512, 128]").PRECISION_LADDER == [128, 512]


@pytest.mark.parametrize("ladder", ["8,64", ""])
def test_bad_ladders_are_rejected(ladder):
    with pytest.raises(ValidationError):
        SolverConfig(PRECISION_LADDER=ladder)
