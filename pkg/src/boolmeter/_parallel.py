"""Order-preserving parallel map used by sweeps."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

ENV_THREADS = "BOOLMETER_THREADS"


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(ENV_THREADS, "1")))
    except ValueError:
        return 1


def pmap(fn, items, threads: int | None = None, chunksize: int = 16) -> list:
    """``list(map(fn, items))``, spread over worker processes when ``threads > 1``.

    Results come back in input order, so output never depends on ``threads``.
    """
    items = list(items)
    threads = default_threads() if threads is None else threads
    if threads <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
