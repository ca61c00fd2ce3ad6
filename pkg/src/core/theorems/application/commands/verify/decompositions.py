from itertools import combinations

from loguru import logger
from pydantic import BaseModel, Field

from core.affine.domain.level import LevelType
from core.shared_kernel.units_of_work.workspace import Workspace
from core.theorems.domain.decomposition import DecompositionSearch, certify_assignment
from core.theorems.domain.exceptional import EXCEPTIONAL_TABLES, ExceptionalTables
from core.theorems.domain.exceptions import DecompositionNotFoundError
from core.weyl.domain.element import format_nodes
from generic.domain.exceptions import BudgetExceededError
from generic.domain.schemas import ReportRow, ReportSection, SuiteReport, status_of

# Типы, таблицы которых проверяются только с deep.
DEEP_TABLES = frozenset({"E7", "E8"})


class Payload(BaseModel):
    levels: list[str] = Field(default_factory=list)
    all_levels: bool = False
    with_affine: bool = False
    deep: bool = Field(default=False, description="Проверять таблицы E7, E8")


class AssignmentRow(ReportRow):
    level: str
    subset: str
    conjugate: bool
    additive: bool


class TableRowReport(ReportRow):
    row: str
    j_nodes: str | None = None
    i_nodes: str | None = None
    conjugate: bool | None = None
    additive: bool | None = None


class DecompositionRow(ReportRow):
    level: str
    reduced: str | None = None
    x: str | None = None
    subset: str | None = None
    source: str | None = None
    claim_b: bool | None = None


class Command:
    """Хорошие разложения w_0 = (x^{-1} bar(w)_J x) w_I.

    Секции: классическое соответствие J -> I для всех J ⊆ S (типы A-D), строки таблиц
    (исключительные типы) и сертифицированный поиск разложения для выбранных уровней.
    """

    def __init__(self, workspace: Workspace) -> None:
        self.workspace = workspace

    def execute(self, payload: Payload) -> SuiteReport:
        sections = []
        with self.workspace as workspace:
            family = workspace.cartan_type.family
            if family in "ABCD":
                sections.append(ReportSection(name="assignments", rows=self._assignments(workspace)))
            if str(workspace.cartan_type) in EXCEPTIONAL_TABLES:
                sections.append(ReportSection(name="tables", rows=self._tables(workspace, payload.deep)))
            levels = workspace.select_levels(payload.levels, payload.all_levels, payload.with_affine)
            sections.append(ReportSection(name="decompositions", rows=[self._search(workspace, j) for j in levels]))
        return SuiteReport(suite="section5", cartan_type=str(self.workspace.cartan_type), sections=sections)

    def _assignments(self, workspace: Workspace) -> list[ReportRow]:
        weyl, conjugacy = workspace.weyl_engine, workspace.conjugacy
        rows: list[ReportRow] = []
        for size in range(weyl.rank + 1):
            for nodes in combinations(range(weyl.rank), size):
                certificate = certify_assignment(weyl, conjugacy, frozenset(nodes))
                rows.append(
                    AssignmentRow(
                        level=format_nodes(nodes),
                        subset=format_nodes(certificate.subset),
                        conjugate=certificate.conjugate,
                        additive=certificate.additive,
                        status=status_of(certificate.certified),
                    )
                )
        return rows

    def _tables(self, workspace: Workspace, deep: bool) -> list[ReportRow]:
        tables = ExceptionalTables(workspace.weyl_engine, workspace.conjugacy)
        if str(workspace.cartan_type) in DEEP_TABLES and not deep:
            logger.info("Таблица {} пропущена: нужен флаг --deep", workspace.cartan_type)
            return [TableRowReport(row=row.describe(), status="skipped", note="--deep") for row in tables.rows]
        rows: list[ReportRow] = []
        for row in tables.rows:
            certificate = tables.certify(row)
            rows.append(
                TableRowReport(
                    row=row.describe(),
                    j_nodes=format_nodes(certificate.j_nodes) if certificate.j_nodes is not None else None,
                    i_nodes=format_nodes(certificate.i_nodes) if certificate.i_nodes is not None else None,
                    conjugate=certificate.conjugate,
                    additive=certificate.additive,
                    status=status_of(certificate.certified),
                )
            )
        return rows

    def _search(self, workspace: Workspace, level: LevelType) -> ReportRow:
        try:
            found = DecompositionSearch(workspace.qbg, workspace.conjugacy).search(workspace.level(level))
        except BudgetExceededError as exc:
            return DecompositionRow.over_budget(exc, level=str(level))
        except DecompositionNotFoundError as exc:
            return DecompositionRow(level=str(level), status="mismatch", note=exc.message)
        return DecompositionRow(
            level=str(level),
            reduced=format_nodes(found.reduced),
            x=str(found.x),
            subset=format_nodes(found.nodes),
            source=found.source,
            claim_b=found.claim_b,
            note="" if found.claim_b else "x максимальной длины не переводит Delta_I в Phi^-",
        )
