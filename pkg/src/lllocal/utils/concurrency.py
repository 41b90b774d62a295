import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

from lllocal.config import app_cfg

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], max_workers: int | None = None) -> list[R]:
    """
    Apply `func` to every item, preserving input order.

    Runs inline when a single worker is configured so stack traces stay readable.
    """
    workers = app_cfg.MAX_WORKERS if max_workers is None else max_workers
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    logger.debug(f"Mapping {len(items)} items over {workers} workers")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
