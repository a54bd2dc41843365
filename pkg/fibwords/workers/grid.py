"""Process fan-out for independent grid checks.

Executes a picklable task function over a list of inputs, either in-process
or across a pool of worker processes, and always returns results in input
order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional, Sequence, TypeVar

from fibwords.config import get_settings

logger = logging.getLogger(__name__)

TaskT = TypeVar("TaskT")
ResultT = TypeVar("ResultT")

# Tasks sent to a worker per round trip.
_MIN_CHUNK = 8


class GridRunner:
    """Runs grid tasks sequentially or on a process pool.

    Usage:
        runner = GridRunner(workers=4)
        reports = runner.map(check_one, tasks)

    Attributes:
        concurrency: Number of worker processes (from settings when not given).
    """

    def __init__(self, workers: Optional[int] = None) -> None:
        """Initialize GridRunner.

        Args:
            workers: Worker processes; ``worker_concurrency`` when None.

        Raises:
            ValueError: If workers is below 1.
        """
        concurrency = get_settings().worker_concurrency if workers is None else workers
        if concurrency < 1:
            raise ValueError(f"workers must be at least 1, got {concurrency}")
        self._concurrency = concurrency

    @property
    def concurrency(self) -> int:
        return self._concurrency

    def map(
        self, fn: Callable[[TaskT], ResultT], tasks: Sequence[TaskT]
    ) -> list[ResultT]:
        """Apply ``fn`` to every task and return the results in task order.

        ``fn`` must be a module-level function when more than one worker runs,
        so it can be sent to the worker processes.
        """
        if not tasks:
            return []
        if self._concurrency == 1 or len(tasks) == 1:
            return [fn(task) for task in tasks]

        chunksize = max(_MIN_CHUNK, len(tasks) // (self._concurrency * 4))
        logger.info(
            "Starting worker pool",
            extra={
                "concurrency": self._concurrency,
                "tasks": len(tasks),
                "chunksize": chunksize,
            },
        )
        with ProcessPoolExecutor(max_workers=self._concurrency) as pool:
            results = list(pool.map(fn, tasks, chunksize=chunksize))
        logger.info("Worker pool finished", extra={"tasks": len(results)})
        return results
