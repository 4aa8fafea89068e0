"""Bounded thread pool used by the enumeration services."""

import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from flagwalk.config import settings

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    """Number of worker threads allowed by ``FLAGWALK_THREADS`` (0 means one per CPU)."""
    if settings.THREADS > 0:
        return settings.THREADS
    return os.cpu_count() or 1


def parallel_map(func: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """
    Apply ``func`` to every item, results in input order.

    Args:
        func: Pure function of one item
        items: Work items

    Returns:
        List of results aligned with ``items``
    """
    work = list(items)
    workers = min(worker_count(), len(work))
    if workers <= 1:
        return [func(item) for item in work]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, work))
