from fractions import Fraction

from loguru import logger
from pydantic import BaseModel, Field, PositiveInt

from core.affine.domain.admissible import above_one, admissible_set
from core.affine.domain.element import AffineElem, Translation
from core.affine.domain.exceptions import AffineElemError
from core.affine.domain.level import LevelType
from core.affine.domain.normal_form import p_l
from core.affine.domain.quotient import semi_affine_quotient
from core.dimension.domain.formula import (
    DimInput,
    closed_form_threshold,
    d_adm_brute,
    d_adm_closed_form,
    formula_value,
    iwahori_witness,
    iwahori_witness_below,
    parahoric_witness,
    rho_term,
)
from core.dimension.domain.newton import NewtonDatum
from core.dimension.domain.virtual import virtual_dimension
from core.rootsys.domain.exceptions import CoweightError
from core.rootsys.domain.root_system import CoweightQ
from core.shared_kernel.units_of_work.workspace import Workspace
from generic.api.pydantic_models import Rational
from generic.domain.exceptions import BudgetExceededError
from generic.domain.schemas import ReportRow, ReportSection, SuiteReport, status_of

# Минимальная глубина mu для проверки построенных элементов.
WITNESS_DEPTH = 4


class Payload(BaseModel):
    depths: list[PositiveInt] = Field(description="Глубины d для mu = d rho^vee")
    levels: list[str] = Field(default_factory=list)
    all_levels: bool = True
    with_affine: bool = True
    extras: bool = Field(default=True, description="Секции левой части, построенных элементов и Omega")


class DAdmRow(ReportRow):
    level: str
    depth: int
    adm_size: int | None = None
    brute: Rational | None = None
    above_one: Rational | None = None
    closed: Rational | None = None
    formula: Rational | None = None
    threshold: int | None = None


class LeftPartRow(ReportRow):
    level: str
    depth: int
    quotient_size: int | None = None
    image_size: int | None = None


class WitnessRow(ReportRow):
    depth: int
    kind: str
    x: str
    element: str | None = None
    virtual: Rational | None = None
    expected: Rational | None = None
    in_adm: bool | None = None
    below: bool | None = None


class OmegaRow(ReportRow):
    depth: int
    tau: str
    level: str
    image: str
    adm_invariant: bool | None = None
    transported: bool | None = None


class Command:
    """Сравнение замкнутой формы d_{^J Adm(mu)}(b) с полным перебором для mu = d rho^vee, b базисный.

    Ниже порога глубины строки помечаются skipped: замкнутая форма не применима.
    """

    def __init__(self, workspace: Workspace) -> None:
        self.workspace = workspace

    def execute(self, payload: Payload) -> SuiteReport:
        sections = {name: [] for name in ("d-adm", "left-part", "witnesses", "omega")}
        with self.workspace as workspace:
            levels = workspace.select_levels(payload.levels, payload.all_levels, payload.with_affine)
            for depth in sorted(set(payload.depths)):
                mu = workspace.roots_engine.rho_check * depth
                sections["d-adm"] += [self._d_adm_row(workspace, level, depth) for level in levels]
                if not payload.extras:
                    continue
                try:
                    adm = admissible_set(workspace.affine_engine, self._translation(mu), workspace.budget.adm_cap)
                except (BudgetExceededError, CoweightError, AffineElemError) as exc:
                    logger.warning("Adm(mu) для depth={} не перечислено: {}", depth, exc)
                    continue
                sections["left-part"] += [self._left_part_row(workspace, adm, level, depth) for level in levels]
                if depth >= WITNESS_DEPTH:
                    sections["witnesses"] += self._witness_rows(workspace, adm, depth)
                sections["omega"] += self._omega_rows(workspace, adm, levels, depth)

        return SuiteReport(
            suite="d-adm",
            cartan_type=str(self.workspace.cartan_type),
            sections=[ReportSection(name=name, rows=rows) for name, rows in sections.items() if rows],
        )

    @staticmethod
    def _translation(mu: CoweightQ) -> Translation:
        return tuple(int(p) for p in mu.fundamental)

    def _d_adm_row(self, workspace: Workspace, level: LevelType, depth: int) -> DAdmRow:
        system = workspace.roots_engine
        subject = {"level": str(level), "depth": depth}
        try:
            inp = DimInput(workspace.affine_engine, level, system.rho_check * depth, NewtonDatum.basic(system))
        except CoweightError as exc:
            return DAdmRow(**subject, status="skipped", note=exc.message)
        threshold = closed_form_threshold(inp.level_data)
        formula = formula_value(inp)
        if depth < threshold:
            return DAdmRow(**subject, formula=formula, threshold=threshold, status="skipped", note="depth < threshold")
        try:
            closed = d_adm_closed_form(inp, workspace.qbg, workspace.budget.threads)
            brute = d_adm_brute(inp, workspace.budget.adm_cap, workspace.budget.threads)
        except BudgetExceededError as exc:
            return DAdmRow.over_budget(exc, **subject, formula=formula, threshold=threshold)
        return DAdmRow(
            **subject,
            adm_size=brute.size,
            brute=brute.value,
            above_one=brute.above_one,
            closed=closed,
            formula=formula,
            threshold=threshold,
            status=status_of(closed == brute.value),
        )

    def _left_part_row(
        self, workspace: Workspace, adm: frozenset[AffineElem], level: LevelType, depth: int
    ) -> LeftPartRow:
        """p_l(^J Adm(mu)) = ^J W для J ⊆ S; для J с аффинным узлом берётся часть _{>1}."""
        affine = workspace.affine_engine
        subject = {"level": str(level), "depth": depth}
        if not level.is_finite_part and depth < 2:
            return LeftPartRow(**subject, status="skipped", note="depth < 2")
        j_adm = frozenset(w for w in adm if affine.is_min_coset_rep(w, sorted(level.nodes)))
        if not level.is_finite_part:
            j_adm = above_one(j_adm)
        try:
            quotient = frozenset(semi_affine_quotient(workspace.weyl_engine, level))
        except BudgetExceededError as exc:
            return LeftPartRow.over_budget(exc, **subject)
        image = frozenset(p_l(w) for w in j_adm)
        return LeftPartRow(
            **subject, quotient_size=len(quotient), image_size=len(image), status=status_of(image == quotient)
        )

    def _witness_rows(self, workspace: Workspace, adm: frozenset[AffineElem], depth: int) -> list[WitnessRow]:
        """d_w(b) построенных элементов против замкнутых выражений, x по всей W."""
        system, affine, weyl = workspace.roots_engine, workspace.affine_engine, workspace.weyl_engine
        mu = system.rho_check * depth
        b = NewtonDatum.basic(system)
        try:
            qbg = workspace.qbg
        except BudgetExceededError as exc:
            return [WitnessRow.over_budget(exc, depth=depth, kind="*", x="*")]
        base = rho_term(DimInput(affine, LevelType(frozenset()), mu, b))
        w0 = weyl.w0

        iwahori = iwahori_witness(affine, qbg, mu)
        expected = base + Fraction(w0.length - weyl.reflection_length(w0), 2)
        virtual = virtual_dimension(iwahori, b)
        below = iwahori_witness_below(affine, qbg, mu)
        rows = [
            WitnessRow(
                depth=depth,
                kind="iwahori",
                x=str(weyl.identity),
                element=str(iwahori),
                virtual=virtual,
                expected=expected,
                in_adm=iwahori in adm,
                below=below,
                status=status_of(virtual == expected and below),
            )
        ]
        for x in weyl.elements:
            element = parahoric_witness(affine, qbg, mu, x)
            expected = base + Fraction(w0.length - qbg.distance(x, x * w0), 2)
            virtual = virtual_dimension(element, b)
            rows.append(
                WitnessRow(
                    depth=depth,
                    kind="parahoric",
                    x=str(x),
                    element=str(element),
                    virtual=virtual,
                    expected=expected,
                    in_adm=element in adm,
                    status=status_of(virtual == expected),
                )
            )
        return rows

    def _omega_rows(
        self, workspace: Workspace, adm: frozenset[AffineElem], levels: list[LevelType], depth: int
    ) -> list[OmegaRow]:
        """Ad(tau)(Adm(mu)) = Adm(mu) и Ad(tau)(^J Adm(mu)) = ^{Ad(tau)(J)} Adm(mu)."""
        affine = workspace.affine_engine
        rows = []
        for tau in workspace.omega.elements:
            if tau.node is None:
                continue
            image = frozenset(affine.conjugate(tau.element, w) for w in adm)
            invariant = image == adm
            for level in levels:
                target = tau.ad(level)
                j_adm = frozenset(w for w in adm if affine.is_min_coset_rep(w, sorted(level.nodes)))
                moved = frozenset(affine.conjugate(tau.element, w) for w in j_adm)
                expected = frozenset(w for w in adm if affine.is_min_coset_rep(w, sorted(target.nodes)))
                rows.append(
                    OmegaRow(
                        depth=depth,
                        tau=str(tau),
                        level=str(level),
                        image=str(target),
                        adm_invariant=invariant,
                        transported=moved == expected,
                        status=status_of(invariant and moved == expected),
                    )
                )
        return rows
