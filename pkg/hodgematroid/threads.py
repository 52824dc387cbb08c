# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Worker pool for the corpus driver.

Each corpus entry runs its pipelines sequentially on one worker thread.
Results come back in submission order whatever the completion order, so
reports stay deterministic for any worker count.
"""

from __future__ import annotations

import logging
import os
import threading
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Generic, NoReturn, TypeVar

from hodgematroid.constants import DEFAULT_THREADS, THREADS_ENV
from hodgematroid.exceptions import ConfigError, MatroidError

logger = logging.getLogger(__name__)

T = TypeVar("T")


def worker_count(override: int | None = None) -> int:
    """Threads to use: ``override`` if given, else the environment.

    Raises:
        ConfigError: If the count is not a positive integer.
    """
    if override is not None:
        if override < 1:
            raise ConfigError(f"thread count must be positive, got {override}")
        return override
    raw = os.environ.get(THREADS_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_THREADS
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigError(f"{THREADS_ENV}={raw!r} is not an integer") from e
    if value < 1:
        raise ConfigError(f"{THREADS_ENV} must be positive, got {value}")
    return value


class _ThreadLocalState(threading.local):
    """The corpus entry the current thread is working on."""

    def __init__(self) -> None:
        super().__init__()
        self.entry: str | None = None


class CorpusPool(Generic[T]):
    """Run one job per named entry on a thread pool."""

    def __init__(self, workers: int = DEFAULT_THREADS) -> None:
        if workers < 1:
            raise ConfigError(f"thread count must be positive, got {workers}")
        self.workers = workers
        self._local = _ThreadLocalState()
        self._done = 0
        self._done_lock = threading.Lock()

    def _wrap_error(self, e: Exception) -> NoReturn:
        name = self._local.entry
        if isinstance(e, MatroidError):
            raise e
        raise MatroidError(f"corpus entry '{name}' crashed: {e}") from e

    def _run_one(
        self, name: str, job: Callable[[str], T], total: int
    ) -> T:
        self._local.entry = name
        try:
            result = job(name)
        except Exception as e:
            self._wrap_error(e)
        finally:
            self._local.entry = None
        with self._done_lock:
            self._done += 1
            done = self._done
        logger.info("corpus %d/%d: %s", done, total, name)
        return result

    def map(self, names: Sequence[str], job: Callable[[str], T]) -> list[T]:
        """``[job(name) for name in names]``, spread over the workers."""
        self._done = 0
        total = len(names)
        if self.workers == 1:
            return [self._run_one(name, job, total) for name in names]
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            futures = [
                executor.submit(self._run_one, name, job, total)
                for name in names
            ]
            return [f.result() for f in futures]
