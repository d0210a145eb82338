"""Tiny helper for order-preserving parallel map over picklable blocks."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

A = TypeVar("A")
B = TypeVar("B")


def default_jobs() -> int:
    return os.cpu_count() or 1


def map_blocks(fn: Callable[[A], B], blocks: Sequence[A], jobs: int | None) -> list[B]:
    """Apply fn to each block; results come back in block order regardless of
    scheduling, so any downstream reduction is deterministic."""
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1 or len(blocks) <= 1:
        return [fn(block) for block in blocks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(blocks))) as pool:
        return list(pool.map(fn, blocks))
