import logging
import threading
from typing import Any, Optional

from langfuse import Langfuse

from lllocal.config import app_cfg
from lllocal.exceptions import LllocalError

logger = logging.getLogger(__name__)


class TracingSetupError(LllocalError):
    """Tracing is enabled but the Langfuse client cannot authenticate."""


class LangfuseProvider:
    """Process-wide Langfuse client, created on first use from app_cfg."""

    _instance: Optional[Langfuse] = None
    _lock = threading.Lock()

    @classmethod
    def get_client(cls) -> Langfuse:
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = cls._connect()
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        with cls._lock:
            cls._instance = None

    @staticmethod
    def _connect() -> Langfuse:
        enabled = app_cfg.LANGFUSE_TRACING_ENABLED
        client = Langfuse(
            public_key=app_cfg.LANGFUSE_PUBLIC_KEY,
            secret_key=app_cfg.LANGFUSE_SECRET_KEY,
            base_url=app_cfg.LANGFUSE_BASE_URL,
            tracing_enabled=enabled,
        )
        if not enabled:
            logger.debug("Tracing disabled; solver spans are no-ops")
            return client

        where = {"base_url": app_cfg.LANGFUSE_BASE_URL}
        try:
            authenticated = client.auth_check()
        except Exception as e:
            logger.exception(f"Could not reach Langfuse at {app_cfg.LANGFUSE_BASE_URL}")
            raise TracingSetupError(f"Langfuse authentication check failed: {e}", details=where) from e
        if not authenticated:
            raise TracingSetupError(
                "Langfuse rejected LANGFUSE_PUBLIC_KEY / LANGFUSE_SECRET_KEY", details=where
            )
        logger.info(f"Tracing {app_cfg.APP_NAME} runs to {app_cfg.LANGFUSE_BASE_URL}")
        return client


def get_tracer() -> Langfuse:
    return LangfuseProvider.get_client()


def span(name: str, **inputs: Any):
    """Span named `<APP_NAME>.<name>` around one solver stage; use as a context manager."""
    return get_tracer().start_as_current_observation(
        as_type="span", name=f"{app_cfg.APP_NAME}.{name}", input=inputs
    )
