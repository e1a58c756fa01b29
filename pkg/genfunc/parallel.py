#!/usr/bin/env python3
"""
genfunc/parallel.py - Chunked map over a thread or process pool.

Chunks run through asyncio and loop.run_in_executor; results come back in
submission order. A single worker runs inline without an event loop.
"""

from __future__ import annotations

import asyncio
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Any, Callable, List, Sequence, Tuple, TypeVar

from monitoring.structured_logger import get_logger
from validation.error_protocol import SpecificationError

logger = get_logger("genfunc.parallel")

T = TypeVar("T")

EXECUTORS = ("thread", "process")


def split_evenly(items: Sequence[T], parts: int) -> List[List[T]]:
    """Round-robin split into at most `parts` non-empty chunks."""
    if parts < 1:
        raise SpecificationError(f"workers must be >= 1, got {parts}")
    parts = max(1, min(parts, len(items)))
    chunks: List[List[T]] = [[] for _ in range(parts)]
    for index, item in enumerate(items):
        chunks[index % parts].append(item)
    return chunks


def _make_executor(kind: str, workers: int) -> Executor:
    if kind == "thread":
        return ThreadPoolExecutor(max_workers=workers)
    if kind == "process":
        return ProcessPoolExecutor(max_workers=workers)
    raise SpecificationError(f"executor must be one of {', '.join(EXECUTORS)}, got {kind!r}")


async def _gather(
    func: Callable[..., Any], arg_tuples: Sequence[Tuple[Any, ...]], pool: Executor
) -> List[Any]:
    loop = asyncio.get_running_loop()
    futures = [loop.run_in_executor(pool, func, *args) for args in arg_tuples]
    try:
        return list(await asyncio.gather(*futures))
    except Exception as exc:
        logger.error("Chunk failed during parallel expansion: %s", exc)
        raise


def run_chunks(
    func: Callable[..., Any],
    arg_tuples: Sequence[Tuple[Any, ...]],
    workers: int = 1,
    executor: str = "thread",
) -> List[Any]:
    """Call func(*args) for every tuple; exceptions from any chunk propagate."""
    if workers < 1:
        raise SpecificationError(f"workers must be >= 1, got {workers}")
    if workers == 1 or len(arg_tuples) <= 1:
        return [func(*args) for args in arg_tuples]
    with _make_executor(executor, workers) as pool:
        return asyncio.run(_gather(func, arg_tuples, pool))
