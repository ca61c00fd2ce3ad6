from loguru import logger
from pydantic import BaseModel, Field

from core.affine.domain.level import LevelType
from core.shared_kernel.units_of_work.workspace import Workspace
from core.theorems.domain.min_distance import min_distance_scan
from generic.domain.exceptions import BudgetExceededError
from generic.domain.schemas import ReportRow, ReportSection, SuiteReport, status_of


class Payload(BaseModel):
    levels: list[str] = Field(default_factory=list, description="Уровни J (\"0,2\"); пусто - J = ∅")
    all_levels: bool = Field(default=False, description="Все сферические J")
    with_affine: bool = Field(default=False, description="Допускать аффинный узел 0 в J")


class MinDistanceRow(ReportRow):
    level: str
    quotient_size: int | None = None
    min: int | None = None
    rhs: int | None = None
    match: bool | None = None
    argmin: list[str] = Field(default_factory=list)


class Command:
    """Проверка min_{x in ^J W} d(x, x w_0) = l_R(w_0) + l(w_J) - l_R(w_J) полным перебором."""

    def __init__(self, workspace: Workspace) -> None:
        self.workspace = workspace

    def execute(self, payload: Payload) -> SuiteReport:
        with self.workspace as workspace:
            levels = workspace.select_levels(payload.levels, payload.all_levels, payload.with_affine)
            rows = [self._row(workspace, level) for level in levels]
        return SuiteReport(
            suite="min-distance",
            cartan_type=str(self.workspace.cartan_type),
            sections=[ReportSection(name="min-distance", rows=rows)],
        )

    def _row(self, workspace: Workspace, level: LevelType) -> MinDistanceRow:
        try:
            report = min_distance_scan(workspace.qbg, workspace.level(level), workspace.budget.threads)
        except BudgetExceededError as exc:
            return MinDistanceRow.over_budget(exc, level=str(level))
        note = ""
        if report.violations:
            note = f"нижняя оценка нарушена на {len(report.violations)} элементах"
            logger.error("Нижняя оценка min-distance нарушена для J={}: {}", level, report.violations[0])
        return MinDistanceRow(
            level=str(level),
            quotient_size=report.quotient_size,
            min=report.min_value,
            rhs=report.rhs,
            match=report.match,
            argmin=[str(x) for x in report.argmin],
            status=status_of(report.match),
            note=note,
        )
