"""
Sharded census execution.

S_n is split into n shards by first entry. Shards run under a semaphore
bounded by `jobs`, in a process pool when jobs > 1 and inline otherwise,
and their tables are merged in shard order.
"""
import asyncio
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Dict, List, Optional, Sequence as SequenceT, Tuple

import structlog

from permcensus.core.census import (
    CONJECTURE_AVOIDED,
    CONJECTURE_COUNTED,
    CensusTable,
    ConjectureRow,
    census_shard,
    check_budget,
    conjecture_rows,
    count_in_table,
    fitting_constraints,
)
from permcensus.core.config import DEFAULT_BLOCK_SIZE, DEFAULT_CENSUS_BUDGET
from permcensus.core.types import ClassConstraint, Pattern

logger = structlog.get_logger(__name__)

ShardRows = Dict[Tuple[int, ...], int]


@dataclass
class ShardMetrics:
    """
    Accounting for the shards a runner has executed.
    """
    shards_processed: int = 0
    permutations_visited: int = 0
    total_processing_time: float = 0.0
    shard_latencies: Dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class ShardTask:
    n: int
    patterns: Tuple[Pattern, ...]
    first: int
    block_size: int


def run_shard(task: ShardTask) -> Tuple[int, ShardRows, float]:
    """Worker entry point; module level so the process pool can pickle it."""
    start = time.perf_counter()
    table = census_shard(task.n, task.patterns, task.first, task.block_size)
    return task.first, table.rows, time.perf_counter() - start


class ShardedCensusRunner:
    """
    Evaluates censuses shard by shard.

    The result is independent of `jobs`: shards are merged in increasing
    order of their first entry whatever order they finish in.
    """
    def __init__(
        self,
        jobs: int = 1,
        budget: int = DEFAULT_CENSUS_BUDGET,
        block_size: int = DEFAULT_BLOCK_SIZE,
    ) -> None:
        if jobs < 1:
            raise ValueError("jobs must be at least 1.")
        self.jobs = jobs
        self.budget = budget
        self.block_size = block_size
        self.metrics = ShardMetrics()

    async def _run(
        self,
        task: ShardTask,
        semaphore: asyncio.Semaphore,
        executor: Optional[Executor],
    ) -> Tuple[int, ShardRows, float]:
        async with semaphore:
            if executor is None:
                return run_shard(task)
            loop = asyncio.get_running_loop()
            return await loop.run_in_executor(executor, run_shard, task)

    def _record(self, n: int, first: int, seconds: float) -> None:
        self.metrics.shards_processed += 1
        self.metrics.permutations_visited += factorial(n - 1)
        self.metrics.total_processing_time += seconds
        self.metrics.shard_latencies[f"{n}:{first}"] = seconds
        logger.debug("census.shard.done", n=n, first=first, seconds=round(seconds, 6))

    async def census(self, n: int, patterns: SequenceT[Pattern]) -> CensusTable:
        """
        Joint census of `patterns` over S_n; same result as joint_census.

        Raises:
            BudgetExceeded: If n exceeds the runner's budget.
        """
        if n < 0:
            raise ValueError("n must be nonnegative.")
        if not patterns:
            raise ValueError("At least one pattern is required.")
        for pattern in patterns:
            if pattern.k > n:
                raise ValueError(f"Pattern {pattern} is longer than n={n}.")
        check_budget(n, self.budget)
        patterns = tuple(patterns)
        table = CensusTable(n, patterns)
        tasks = [ShardTask(n, patterns, first, self.block_size) for first in range(1, n + 1)]
        semaphore = asyncio.Semaphore(self.jobs)
        started = time.perf_counter()
        if self.jobs == 1:
            results = [await self._run(task, semaphore, None) for task in tasks]
        else:
            with ProcessPoolExecutor(max_workers=self.jobs) as executor:
                results = list(await asyncio.gather(
                    *(self._run(task, semaphore, executor) for task in tasks)
                ))

        for first, rows, seconds in sorted(results, key=lambda result: result[0]):
            table = table.merge(CensusTable(n, patterns, rows))
            self._record(n, first, seconds)
        logger.info(
            "census.done",
            n=n,
            patterns=[str(p) for p in patterns],
            rows=len(table.rows),
            jobs=self.jobs,
            seconds=round(time.perf_counter() - started, 6),
        )
        return table

    async def count_class(
        self, n: int, constraints: SequenceT[Tuple[Pattern, ClassConstraint]]
    ) -> int:
        """Sharded counterpart of census.count_class."""
        check_budget(n, self.budget)
        fitting = fitting_constraints(n, constraints)
        if fitting is None:
            return 0
        if not fitting:
            return factorial(n)
        table = await self.census(n, [p for p, _ in fitting])
        return count_in_table(table, [rule for _, rule in fitting])

    async def conjecture(
        self, n_max: int, r_max: int, n_min: int = 1
    ) -> List[ConjectureRow]:
        """Sharded counterpart of census.conjecture_report."""
        if r_max < 0:
            raise ValueError("r_max must be nonnegative.")
        check_budget(n_max, self.budget)
        report: List[ConjectureRow] = []
        for n in range(max(n_min, 1), n_max + 1):
            if n < 3:
                table = CensusTable(n, (CONJECTURE_AVOIDED, CONJECTURE_COUNTED))
                table.add((0, 0), factorial(n))
            else:
                table = await self.census(n, [CONJECTURE_AVOIDED, CONJECTURE_COUNTED])
            report.extend(conjecture_rows(table, r_max))
        return report
