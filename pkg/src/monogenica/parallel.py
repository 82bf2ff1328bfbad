"""Optional thread parallelism for coefficient and Gram loops.

The MONOGENICA_THREADS environment variable caps the worker count
(default 1, serial).  Results are collected in submission order and each
task reduces its own sums in a fixed order, so outputs are identical
whether or not threads are used.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

__all__ = ["thread_count", "ordered_map"]


def thread_count() -> int:
    raw = os.environ.get("MONOGENICA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def ordered_map(fn, items: list) -> list:
    workers = thread_count()
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
