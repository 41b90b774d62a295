import threading

import pytest

from lllocal.config import app_cfg
from lllocal.utils.concurrency import ordered_map


@pytest.mark.parametrize("workers", [1, 4])
def test_order_is_preserved(workers):
    assert ordered_map(lambda x: x * x, range(20), workers) == [x * x for x in range(20)]


def test_single_worker_runs_inline():
    threads = ordered_map(lambda _: threading.get_ident(), range(5), 1)
    assert set(threads) == {threading.get_ident()}


def test_default_comes_from_config(monkeypatch):
    monkeypatch.setattr(app_cfg, "MAX_WORKERS", 3)
    seen = set()
    barrier = threading.Barrier(3, timeout=5)

    def work(x):
        seen.add(threading.get_ident())
        barrier.wait()
        return x

    assert ordered_map(work, range(3)) == [0, 1, 2]
    assert len(seen) == 3


def test_errors_propagate():
    with pytest.raises(ZeroDivisionError):
        ordered_map(lambda x: 1 // x, [1, 0, 2], 2)
