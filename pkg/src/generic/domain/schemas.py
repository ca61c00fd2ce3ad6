from collections.abc import Iterable
from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, SerializeAsAny

from generic.domain.exceptions import BudgetExceededError

type RowStatus = Literal["ok", "mismatch", "budget_exceeded", "skipped"]


def status_of(holds: bool) -> RowStatus:
    return "ok" if holds else "mismatch"


class ReportRow(BaseModel):
    """Строка отчёта проверки.

    Поля наследников становятся колонками TSV в порядке объявления; status и note идут последними.
    """

    model_config = ConfigDict(from_attributes=True, arbitrary_types_allowed=True)

    status: RowStatus = "ok"
    note: str = ""

    @classmethod
    def columns(cls) -> list[str]:
        own = [name for name in cls.model_fields if name not in ReportRow.model_fields]
        return [*own, *ReportRow.model_fields]

    @classmethod
    def over_budget(cls, exc: BudgetExceededError, **subject: object) -> Self:
        """Строка о превышении бюджета; вычисляемые поля остаются пустыми."""
        return cls(status="budget_exceeded", note=f"{exc.setting}: {exc.measured} > {exc.limit}", **subject)


class ReportSection(BaseModel):
    name: str
    rows: list[SerializeAsAny[ReportRow]] = Field(default_factory=list)


class SuiteReport(BaseModel):
    """Отчёт одного набора проверок."""

    suite: str
    cartan_type: str
    exhaustive: bool = True
    sections: list[ReportSection] = Field(default_factory=list)

    def statuses(self) -> Iterable[RowStatus]:
        return (row.status for section in self.sections for row in section.rows)

    @property
    def exit_code(self) -> int:
        """1 при расхождении, иначе 3 при превышении бюджета, иначе 0."""
        statuses = set(self.statuses())
        if "mismatch" in statuses:
            return 1
        if "budget_exceeded" in statuses:
            return 3
        return 0
