"""
Ordered parallel map
Runs independent subproblems on a thread pool and merges results in input order
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from loguru import logger

T = TypeVar("T")
R = TypeVar("R")

_thread_cap: Optional[int] = None


def set_thread_cap(threads: Optional[int]) -> None:
    """Set the process-wide worker cap (None restores the configured default)"""
    global _thread_cap
    _thread_cap = None if threads is None else max(1, int(threads))


def _default_threads() -> int:
    if _thread_cap is not None:
        return _thread_cap
    from config.settings import PARALLEL_CONFIG
    return PARALLEL_CONFIG["threads"]


def ordered_map(func: Callable[[T], R], items: Iterable[T],
                max_workers: Optional[int] = None) -> List[R]:
    """
    Apply func to every item; results keep the order of items

    Args:
        func: Pure function of one item
        items: Inputs
        max_workers: Thread count; defaults to the EHLCP_THREADS cap

    Returns:
        List of results in input order
    """
    items = list(items)
    workers = max_workers or _default_threads()
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.debug(f"Dispatching {len(items)} subproblems to {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
