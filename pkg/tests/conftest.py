import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from lllocal.config import app_cfg
from lllocal.utils.tracing_utils import LangfuseProvider

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(autouse=True)
def no_tracing(monkeypatch):
    monkeypatch.setattr(app_cfg, "LANGFUSE_TRACING_ENABLED", False)
    LangfuseProvider.reset()
    yield
    LangfuseProvider.reset()


@pytest.fixture
def write_json(tmp_path: Path):
    """Write a pydantic model or plain data to tmp_path/name and return the path."""

    def write(name: str, payload) -> Path:
        path = tmp_path / name
        if hasattr(payload, "model_dump_json"):
            path.write_text(payload.model_dump_json())
        else:
            path.write_text(json.dumps(payload))
        return path

    return write
