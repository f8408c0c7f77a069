from math import factorial

import pytest

from permcensus.core.census import conjecture_report, count_class, joint_census
from permcensus.core.errors import BudgetExceeded
from permcensus.core.patterns import parse_pattern
from permcensus.core.types import ClassConstraint
from permcensus.services.sharding import ShardedCensusRunner, ShardTask, run_shard

P123 = parse_pattern("123")
P132 = parse_pattern("132")
P2413 = parse_pattern("2413")


def test_run_shard_covers_one_first_entry():
    first, rows, seconds = run_shard(ShardTask(5, (P123,), 2, 7))
    assert first == 2
    assert sum(rows.values()) == factorial(4)
    assert seconds >= 0


@pytest.mark.parametrize("jobs", [1, 2])
async def test_runner_matches_joint_census(jobs):
    runner = ShardedCensusRunner(jobs=jobs, block_size=50)
    for n in (4, 7):
        table = await runner.census(n, [P123, P132, P2413])
        assert table.rows == joint_census(n, [P123, P132, P2413]).rows


async def test_runner_metrics():
    runner = ShardedCensusRunner()
    await runner.census(6, [P123])
    metrics = runner.metrics
    assert metrics.shards_processed == 6
    assert metrics.permutations_visited == factorial(6)
    assert set(metrics.shard_latencies) == {f"6:{first}" for first in range(1, 7)}
    assert metrics.total_processing_time >= 0


async def test_runner_rejects_bad_input():
    runner = ShardedCensusRunner()
    with pytest.raises(ValueError):
        await runner.census(2, [P123])
    with pytest.raises(ValueError):
        await runner.census(4, [])
    with pytest.raises(BudgetExceeded):
        await runner.census(12, [P123])
    with pytest.raises(ValueError):
        ShardedCensusRunner(jobs=0)


async def test_budget_override_is_applied():
    runner = ShardedCensusRunner(budget=4)
    assert runner.budget == 4
    with pytest.raises(BudgetExceeded):
        await runner.census(5, [P123])
    table = await ShardedCensusRunner(budget=12).census(5, [P123])
    assert sum(table.rows.values()) == factorial(5)


async def test_runner_count_class():
    runner = ShardedCensusRunner()
    one, avoid = ClassConstraint.exactly(1), ClassConstraint.avoid()
    assert await runner.count_class(4, [(P123, one), (P132, avoid)]) == 4
    assert await runner.count_class(8, [(P123, one), (P132, one)]) == 48
    assert await runner.count_class(2, [(P123, avoid)]) == 2
    assert await runner.count_class(2, [(P123, one)]) == 0
    assert await runner.count_class(7, [(P2413, avoid)]) == count_class(7, [(P2413, avoid)])


async def test_runner_conjecture_matches_serial_report():
    runner = ShardedCensusRunner(jobs=2)
    rows = await runner.conjecture(8, 2, n_min=2)
    assert rows == conjecture_report(8, 2, n_min=2)
    assert rows[0].n == 2
    with pytest.raises(ValueError):
        await runner.conjecture(5, -1)
