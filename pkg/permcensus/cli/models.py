"""
Machine-readable output models.

Every command builds one of these; `--json` dumps it, `--csv` flattens it
through `csv_table`. Large integers that must survive any JSON consumer
(census cardinalities, conjecture counts) are emitted as decimal strings.
"""
from __future__ import annotations

from typing import Any, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from permcensus.core.bijection import BijectionReport
from permcensus.core.census import CensusTable, ConjectureRow
from permcensus.core.patterns import format_pattern
from permcensus.core.recfit import PolyRecurrence
from permcensus.services.verification import VerificationReport

CsvTable = Tuple[List[str], List[List[str]]]


class OutputModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    def csv_table(self) -> CsvTable:
        """One row holding every scalar field."""
        data = self.model_dump(by_alias=True)
        header = [k for k, v in data.items() if not isinstance(v, (list, dict))]
        return header, [[str(data[k]) for k in header]]


class CountResultModel(OutputModel):
    permutation: str
    pattern: str
    count: int


class CensusRowModel(BaseModel):
    counts: List[int]
    cardinality: str


class CensusTableModel(OutputModel):
    n: int
    patterns: List[str]
    rows: List[CensusRowModel]

    @classmethod
    def from_table(cls, table: CensusTable) -> CensusTableModel:
        return cls(
            n=table.n,
            patterns=[format_pattern(p) for p in table.patterns],
            rows=[
                CensusRowModel(counts=list(counts), cardinality=str(cardinality))
                for counts, cardinality in table.sorted_rows()
            ],
        )

    def csv_table(self) -> CsvTable:
        header = list(self.patterns) + ["cardinality"]
        return header, [[str(c) for c in row.counts] + [row.cardinality] for row in self.rows]


class ClassResultModel(OutputModel):
    n: int
    constraints: List[str]
    count: int


class GenerateResultModel(OutputModel):
    n: int
    kind: str
    count: int
    permutations: List[str]

    def csv_table(self) -> CsvTable:
        return ["permutation"], [[p] for p in self.permutations]


class BijectionMapModel(OutputModel):
    direction: str
    source: str = Field(serialization_alias="input")
    image: str = Field(serialization_alias="output")


BIJECTION_CSV_HEADER = ["n", "sizeS", "sizeT", "expected", "passed", "failures"]


class BijectionFailureModel(BaseModel):
    permutation: Optional[str]
    reason: str


class BijectionReportModel(OutputModel):
    n: int
    size_s: int = Field(serialization_alias="sizeS")
    size_t: int = Field(serialization_alias="sizeT")
    expected: int
    passed: bool
    failures: List[BijectionFailureModel]

    @classmethod
    def from_report(cls, report: BijectionReport) -> BijectionReportModel:
        return cls(
            n=report.n,
            size_s=report.size_s,
            size_t=report.size_t,
            expected=report.expected,
            passed=report.passed,
            failures=[
                BijectionFailureModel(
                    permutation=None if f.permutation is None else str(f.permutation),
                    reason=f.reason,
                )
                for f in report.failures
            ],
        )

    def csv_row(self) -> List[str]:
        return [str(self.n), str(self.size_s), str(self.size_t), str(self.expected),
                str(self.passed), str(len(self.failures))]

    def csv_table(self) -> CsvTable:
        return BIJECTION_CSV_HEADER, [self.csv_row()]


class BijectionRunModel(OutputModel):
    reports: List[BijectionReportModel]

    def csv_table(self) -> CsvTable:
        return BIJECTION_CSV_HEADER, [r.csv_row() for r in self.reports]


class RecurrenceModel(BaseModel):
    order: int
    degree: int
    coefficients: List[List[int]]
    human: str

    @classmethod
    def from_recurrence(cls, rec: PolyRecurrence) -> RecurrenceModel:
        return cls(human=rec.describe(), **rec.to_json())


class FitResultModel(OutputModel):
    start_index: int
    terms: int
    found: bool
    recurrence: Optional[RecurrenceModel] = None

    def csv_table(self) -> CsvTable:
        header = ["found", "order", "degree", "recurrence"]
        rec = self.recurrence
        if rec is None:
            return header, [[str(self.found), "", "", ""]]
        return header, [[str(self.found), str(rec.order), str(rec.degree), rec.human]]


class VerificationRowModel(BaseModel):
    n: int
    expected: int
    observed: int
    equal: bool
    subcases: Optional[List[int]] = None

    model_config = ConfigDict(from_attributes=True)


class VerificationReportModel(OutputModel):
    target: str
    oracle: str
    passed: bool
    note: str
    rows: List[VerificationRowModel]
    failures: List[str]

    @classmethod
    def from_report(cls, report: VerificationReport) -> VerificationReportModel:
        return cls(
            target=report.target,
            oracle=report.oracle,
            passed=report.passed,
            note=report.note,
            rows=[VerificationRowModel.model_validate(row) for row in report.rows],
            failures=list(report.failures),
        )

    def csv_table(self) -> CsvTable:
        header = ["n", "expected", "observed", "equal"]
        return header, [
            [str(r.n), str(r.expected), str(r.observed), str(r.equal)] for r in self.rows
        ]


class ConjectureRowModel(BaseModel):
    n: int
    r: int
    count: str
    decomposition: List[str]
    avoiders: str

    @classmethod
    def from_row(cls, row: ConjectureRow) -> ConjectureRowModel:
        return cls(
            n=row.n,
            r=row.r,
            count=str(row.cardinality),
            decomposition=[str(part) for part in row.decomposition],
            avoiders=str(row.avoiders),
        )


class ConjectureReportModel(OutputModel):
    r_max: int
    rows: List[ConjectureRowModel]

    def csv_table(self) -> CsvTable:
        header = ["n", "r", "count", "decomposition", "avoiders"]
        return header, [
            [str(r.n), str(r.r), r.count, "+".join(r.decomposition), r.avoiders]
            for r in self.rows
        ]


def dump(model: BaseModel) -> Any:
    return model.model_dump(mode="json", by_alias=True)
