import pytest
from pydantic import ValidationError

from permcensus.services.sharding import ShardedCensusRunner
from permcensus.services.verification import (
    TARGETS,
    Oracle,
    VerifySpec,
    run_verification,
)


async def test_theorem1_against_census():
    report = await run_verification(VerifySpec(target="thm1", n_min=3, n_max=9))
    assert report.passed
    assert [row.n for row in report.rows] == list(range(3, 10))
    assert [row.expected for row in report.rows] == [1, 4, 12, 32, 80, 192, 448]
    assert report.summary() == "PASS, 7/7 values equal"


@pytest.mark.parametrize("target, n_min, n_max", [
    ("lemma1", 2, 8), ("lemma2", 1, 8), ("thm2", 3, 8), ("thm3", 5, 9),
    ("noonan", 3, 8), ("bona", 3, 8),
])
async def test_census_oracle_passes(target, n_min, n_max):
    runner = ShardedCensusRunner(jobs=1)
    report = await run_verification(VerifySpec(target=target, n_min=n_min, n_max=n_max), runner)
    assert report.passed, report.rows
    assert report.matches == n_max - n_min + 1


@pytest.mark.parametrize("target, n_max", [
    ("lemma1", 30), ("lemma2", 20), ("thm1", 60), ("thm2", 60), ("thm3", 60),
])
async def test_closed_form_oracle_passes(target, n_max):
    spec = VerifySpec(target=target, n_min=0, n_max=n_max, oracle=Oracle.CLOSED_FORM)
    report = await run_verification(spec)
    assert report.passed
    assert not report.failures
    assert "skipped n = 0" in report.note


async def test_printed_recurrence_divergence_is_reproduced():
    spec = VerifySpec(target="thm3-printed", n_min=5, n_max=8, oracle=Oracle.CLOSED_FORM)
    report = await run_verification(spec)
    assert report.passed
    by_n = {row.n: row for row in report.rows}
    assert by_n[5].equal
    assert (by_n[6].expected, by_n[6].observed, by_n[6].equal) == (15, 12, False)
    assert "divergence at n = 6 (15 vs 12) reproduced" in report.note


async def test_printed_recurrence_needs_six_in_range():
    spec = VerifySpec(target="thm3-printed", n_min=7, n_max=8, oracle=Oracle.CLOSED_FORM)
    report = await run_verification(spec)
    assert not report.passed
    assert "does not contain n = 6" in report.note
    assert report.summary().startswith("FAIL")


async def test_printed_recurrence_against_census():
    spec = VerifySpec(target="thm3-printed", n_min=5, n_max=7)
    report = await run_verification(spec)
    assert report.passed
    assert report.rows[1].observed == 12


async def test_skipped_values_are_noted():
    report = await run_verification(VerifySpec(target="thm1", n_min=0, n_max=4))
    assert [row.n for row in report.rows] == [3, 4]
    assert report.passed
    assert report.note == "skipped n = 0, 1, 2 below the stated range n >= 3"


async def test_empty_range_fails():
    report = await run_verification(VerifySpec(target="thm3", n_min=1, n_max=4))
    assert not report.passed
    assert not report.rows
    assert "empty range" in report.note


async def test_bijection_target():
    report = await run_verification(VerifySpec(target="bijection", n_min=1, n_max=8))
    assert report.passed
    assert [row.n for row in report.rows] == list(range(3, 9))
    assert all(row.expected == row.observed for row in report.rows)
    assert report.note == "skipped n = 1, 2 below the stated range n >= 3"


def test_targets():
    assert "bijection" in TARGETS
    assert "thm3-printed" in TARGETS


@pytest.mark.parametrize("kwargs", [
    {"target": "thm4", "n_min": 3, "n_max": 5},
    {"target": "thm1", "n_min": 6, "n_max": 5},
    {"target": "thm1", "n_min": -1, "n_max": 5},
    {"target": "thm1", "n_min": 3, "n_max": 12},
    {"target": "bijection", "n_min": 3, "n_max": 12, "oracle": Oracle.CLOSED_FORM},
    {"target": "noonan", "n_min": 3, "n_max": 5, "oracle": Oracle.CLOSED_FORM},
    {"target": "bona", "n_min": 3, "n_max": 5, "oracle": Oracle.CLOSED_FORM},
])
def test_spec_validation(kwargs):
    with pytest.raises(ValidationError):
        VerifySpec(**kwargs)


def test_spec_budget_is_configurable():
    assert VerifySpec(target="thm1", n_min=3, n_max=12, budget=12).n_max == 12
    assert VerifySpec(target="thm1", n_min=3, n_max=40, oracle=Oracle.CLOSED_FORM).n_max == 40


async def test_theorem3_rows_carry_subcase_terms():
    report = await run_verification(VerifySpec(target="thm3", n_min=5, n_max=8))
    assert report.passed
    assert [row.subcases for row in report.rows] == [
        (0, 0, 1, 1), (2, 1, 4, 5), (14, 6, 11, 17), (62, 23, 26, 49)
    ]
    assert all(sum(row.subcases) == row.observed for row in report.rows)

    plain = await run_verification(VerifySpec(target="thm1", n_min=3, n_max=4))
    assert all(row.subcases is None for row in plain.rows)
