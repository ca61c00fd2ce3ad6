from funcy import take
from pydantic import BaseModel, Field

from core.affine.domain.element import AffineElem
from core.affine.domain.level import LevelData, spherical_levels
from core.affine.domain.quotient import semi_affine_quotient
from core.qbg.domain.lemmas import LemmaCheck, run_all, vertex_pairs
from core.shared_kernel.units_of_work.workspace import Workspace
from core.theorems.domain.min_distance import verify_key_lemma
from core.weyl.domain.element import WeylElem
from generic.domain.exceptions import BudgetExceededError
from generic.domain.schemas import ReportRow, ReportSection, SuiteReport, status_of

# Полный перебор пар вершин до этого ранга включительно.
EXHAUSTIVE_RANK = 3


class Payload(BaseModel):
    seed: int = Field(default=0, description="Зерно выборки пар")
    key_sources: int = Field(default=200, gt=0, description="Сколько x in ^J W брать для key-lemma выше ранга 3")


class LemmaRow(ReportRow):
    lemma: str
    checked: int | None = None
    failures: int | None = None
    examples: list[str] = Field(default_factory=list)

    @classmethod
    def from_check(cls, check: LemmaCheck) -> "LemmaRow":
        return cls(
            lemma=check.name,
            checked=check.checked,
            failures=check.failure_count,
            examples=check.failures,
            status=status_of(check.ok),
        )


class KeyLemmaRow(ReportRow):
    level: str
    checked: int | None = None
    failures: int | None = None
    examples: list[str] = Field(default_factory=list)


class Command:
    """Утверждения о весах и расстояниях квантового графа Брюа.

    До ранга 3 все проверки идут по всем парам вершин, выше - по выборке из sample_pairs пар.
    Отдельная секция проверяет d(x, x w_0) = l(y) + d(x, bar(y) x w_0) для x in ^J W, y in W~_J.
    """

    def __init__(self, workspace: Workspace) -> None:
        self.workspace = workspace

    def execute(self, payload: Payload) -> SuiteReport:
        with self.workspace as workspace:
            exhaustive = workspace.cartan_type.rank <= EXHAUSTIVE_RANK
            try:
                qbg = workspace.qbg
            except BudgetExceededError as exc:
                return SuiteReport(
                    suite="lemmas",
                    cartan_type=str(workspace.cartan_type),
                    exhaustive=False,
                    sections=[ReportSection(name="lemmas", rows=[LemmaRow.over_budget(exc, lemma="*")])],
                )
            order = len(qbg.weyl.elements)
            sample = order * order if exhaustive else workspace.budget.sample_pairs
            pairs, complete = vertex_pairs(qbg, sample, payload.seed)
            lemma_rows = [LemmaRow.from_check(check) for check in run_all(qbg, pairs)]
            key_rows = [
                self._key_lemma(workspace, workspace.level(level), exhaustive, payload.key_sources)
                for level in spherical_levels(workspace.roots_engine)
            ]
        return SuiteReport(
            suite="lemmas",
            cartan_type=str(self.workspace.cartan_type),
            exhaustive=complete and exhaustive,
            sections=[ReportSection(name="lemmas", rows=lemma_rows), ReportSection(name="key-lemma", rows=key_rows)],
        )

    def _key_lemma(self, workspace: Workspace, level: LevelData, exhaustive: bool, sample: int) -> KeyLemmaRow:
        qbg = workspace.qbg
        affine = workspace.affine_engine
        if exhaustive:
            ys = level.elements
        else:
            ys = (affine.identity, level.longest, *(affine.simple(j) for j in sorted(level.level.nodes)))
        check = LemmaCheck("key-lemma")
        quotient = semi_affine_quotient(qbg.weyl, level.level)
        for x in quotient if exhaustive else take(sample, quotient):
            for y in ys:
                result = verify_key_lemma(qbg, level, x, y)
                check.record(result.holds, _describe(x, y, result.lhs))
        return KeyLemmaRow(
            level=str(level.level),
            checked=check.checked,
            failures=check.failure_count,
            examples=check.failures,
            status=status_of(check.ok),
        )


def _describe(x: WeylElem, y: AffineElem, lhs: int) -> str:
    return f"x={x}, y={y}, d(x,xw0)={lhs}"
