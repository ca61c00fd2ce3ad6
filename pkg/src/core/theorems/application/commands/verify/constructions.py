from pydantic import BaseModel, Field

from core.affine.domain.level import LevelType
from core.affine.domain.quotient import semi_affine_quotient
from core.shared_kernel.units_of_work.workspace import Workspace
from core.theorems.domain.constructions import ClassicalConstruction, witness_min_distance, witnesses
from core.theorems.domain.min_distance import min_distance_scan
from generic.domain.exceptions import BudgetExceededError, VerificationError
from generic.domain.schemas import ReportRow, ReportSection, SuiteReport, status_of


class Payload(BaseModel):
    levels: list[str] = Field(default_factory=list)
    all_levels: bool = False
    with_affine: bool = False


class ConstructionRow(ReportRow):
    level: str
    x: str | None = None
    length: int | None = None
    target_length: int | None = None
    method: str | None = None
    distance: int | None = None
    length_gap: int | None = None
    weight_zero: bool | None = None
    scan_min: int | None = None
    witness_min: int | None = None


class FactorRow(ReportRow):
    level: str
    node: int
    factor: str
    method: str


class WitnessRow(ReportRow):
    level: str
    quotient_size: int | None = None
    witnesses: int | None = None
    witness_min: int | None = None


class Command:
    """Явные x in ^J W с x <= x w_0 для J ⊆ S в типах A, B, C.

    Для каждого x проверяются d(x, x w_0) = l(x w_0) - l(x), wt(x, x w_0) = 0 и совпадение
    минимума по ^J W с l(w_0) - 2 max l(x). Для J с аффинным узлом считаются только свидетели.
    """

    def __init__(self, workspace: Workspace) -> None:
        self.workspace = workspace

    def execute(self, payload: Payload) -> SuiteReport:
        with self.workspace as workspace:
            construction = ClassicalConstruction(workspace.weyl_engine)
            levels = workspace.select_levels(payload.levels, payload.all_levels, payload.with_affine)
            rows, factors = [], []
            for level in (level for level in levels if level.is_finite_part):
                row, steps = self._construction_row(workspace, construction, level)
                rows.append(row)
                factors += steps
            affine_rows = [self._witness_row(workspace, level) for level in levels if not level.is_finite_part]

        sections = [ReportSection(name="constructions", rows=rows), ReportSection(name="factors", rows=factors)]
        if affine_rows:
            sections.append(ReportSection(name="witnesses", rows=affine_rows))
        return SuiteReport(suite="section4", cartan_type=str(self.workspace.cartan_type), sections=sections)

    def _construction_row(
        self, workspace: Workspace, construction: ClassicalConstruction, level: LevelType
    ) -> tuple[ConstructionRow, list[FactorRow]]:
        nodes = level.finite_nodes
        try:
            built = construction.construct(nodes)
        except VerificationError as exc:
            return ConstructionRow(level=str(level), status="mismatch", note=exc.message), []
        steps = [
            FactorRow(level=str(level), node=step.node + 1, factor=str(step.factor), method=step.method)
            for step in built.steps
        ]
        x = built.x
        weyl = workspace.weyl_engine
        x_w0 = x * weyl.w0
        try:
            qbg = workspace.qbg
            distance = qbg.distance(x, x_w0)
            weight_zero = not any(qbg.weight(x, x_w0))
            scan_min = min_distance_scan(qbg, workspace.level(level), workspace.budget.threads).min_value
            witness_min = witness_min_distance(weyl, level)
        except BudgetExceededError as exc:
            return ConstructionRow.over_budget(exc, level=str(level), x=str(x), length=x.length), steps

        length_gap = x_w0.length - x.length
        holds = distance == length_gap and weight_zero and scan_min == witness_min == distance
        return (
            ConstructionRow(
                level=str(level),
                x=str(x),
                length=x.length,
                target_length=construction.target_length(nodes),
                method=built.method,
                distance=distance,
                length_gap=length_gap,
                weight_zero=weight_zero,
                scan_min=scan_min,
                witness_min=witness_min,
                status=status_of(holds),
                note="множитель найден перебором" if built.method == "search" else "",
            ),
            steps,
        )

    def _witness_row(self, workspace: Workspace, level: LevelType) -> WitnessRow:
        weyl = workspace.weyl_engine
        try:
            quotient_size = len(semi_affine_quotient(weyl, level))
            found = witnesses(weyl, level)
        except BudgetExceededError as exc:
            return WitnessRow.over_budget(exc, level=str(level))
        witness_min = weyl.w0.length - 2 * max(x.length for x in found) if found else None
        return WitnessRow(level=str(level), quotient_size=quotient_size, witnesses=len(found), witness_min=witness_min)
