from fractions import Fraction

from pydantic import Field, model_validator

from core.affine.domain.level import LevelType
from core.dimension.domain.formula import DimensionResult, DimInput, dim_formula
from core.dimension.domain.newton import NewtonDatum, newton_datum_from_slopes, parse_kappa
from core.rootsys.domain.root_system import CoweightBasis, CoweightQ, format_vector
from core.shared_kernel.units_of_work.workspace import Workspace
from generic.api.pydantic_models import CamelCasedAliasesModel, Rational


class Payload(CamelCasedAliasesModel):
    level: str = Field(default="", description="Уровень J, например \"0,2\"; пусто - уровень Ивахори")
    mu: str = Field(description="Кохарактер mu")
    mu_coords: CoweightBasis = Field(default="coroot", description="Базис координат mu и nu")
    nu: str | None = Field(default=None, description="Точка Ньютона nu(b); по умолчанию 0")
    slopes: str | None = Field(default=None, description="Наклоны GL_n (тип A) вместо nu и defect")
    kappa: str | None = Field(default=None, description="Класс Коттвица; по умолчанию mu^♮")
    defect: int = Field(default=0, ge=0, description="def(b)")

    @model_validator(mode="after")
    def check_newton_source(self) -> "Payload":
        if self.slopes is not None and self.nu is not None:
            raise ValueError("nu и slopes взаимоисключающие")
        return self


class RegularityDTO(CamelCasedAliasesModel):
    depth: Rational
    two_regular: bool
    four_regular: bool
    deep_regular: bool
    deep_threshold: int


class GapDTO(CamelCasedAliasesModel):
    iwahori: bool
    parahoric: bool
    relaxed: bool
    variant: str


class LevelReductionDTO(CamelCasedAliasesModel):
    tau: str | None
    image: str | None
    avoids_special: bool


class HypothesesDTO(CamelCasedAliasesModel):
    regularity: RegularityDTO
    gap: GapDTO
    level_reduction: LevelReductionDTO


class InputsEchoDTO(CamelCasedAliasesModel):
    cartan_type: str
    lattice: str
    level: str
    mu: str
    nu: str
    kappa: str | None
    defect: int


class DimensionDTO(CamelCasedAliasesModel):
    value: Rational
    case: str
    hypotheses: HypothesesDTO
    inputs_echo: InputsEchoDTO


def _regularity(result: DimensionResult) -> RegularityDTO:
    report = result.regularity
    return RegularityDTO(
        depth=report.depth,
        two_regular=report.two_regular,
        four_regular=report.four_regular,
        deep_regular=report.deep_regular,
        deep_threshold=report.deep_threshold,
    )


def _format_kappa(kappa: tuple[Fraction, ...] | None) -> str | None:
    return format_vector(kappa) if kappa is not None else None


class Command:
    """Значение формулы размерности и случай теоремы, в котором оно равно dim X(mu, b)_J."""

    def __init__(self, workspace: Workspace) -> None:
        self.workspace = workspace

    def build_input(self, payload: Payload) -> DimInput:
        workspace = self.workspace
        system = workspace.roots_engine
        mu = CoweightQ.parse(system, payload.mu, payload.mu_coords)
        if payload.slopes is not None:
            datum = newton_datum_from_slopes(system, [part.strip() for part in payload.slopes.split(",")])
            b = NewtonDatum(datum.nu, parse_kappa(system, payload.kappa), datum.defect)
        else:
            nu = CoweightQ.parse(system, payload.nu, payload.mu_coords) if payload.nu else system.zero
            b = NewtonDatum(nu, parse_kappa(system, payload.kappa), payload.defect)
        return DimInput(workspace.affine_engine, LevelType.parse(payload.level, system.rank), mu, b)

    def evaluate(self, payload: Payload) -> tuple[DimInput, DimensionResult]:
        with self.workspace as workspace:
            inp = self.build_input(payload)
            return inp, dim_formula(inp, workspace.qbg, workspace.omega)

    def execute(self, payload: Payload) -> DimensionDTO:
        inp, result = self.evaluate(payload)
        return to_dto(inp, result)


def to_dto(inp: DimInput, result: DimensionResult) -> DimensionDTO:
    reduction = result.level_reduction
    return DimensionDTO(
        value=result.value,
        case=result.case,
        hypotheses=HypothesesDTO(
            regularity=_regularity(result),
            gap=GapDTO(
                iwahori=result.gap.iwahori,
                parahoric=result.gap.parahoric,
                relaxed=result.gap.relaxed,
                variant=result.gap.variant,
            ),
            level_reduction=LevelReductionDTO(
                tau=reduction.tau,
                image=str(reduction.image) if reduction.image is not None else None,
                avoids_special=reduction.avoids_special,
            ),
        ),
        inputs_echo=InputsEchoDTO(
            cartan_type=str(inp.affine.system),
            lattice=inp.affine.lattice,
            level=str(inp.level),
            mu=str(inp.mu),
            nu=str(inp.b.nu),
            kappa=_format_kappa(inp.b.kappa),
            defect=inp.b.defect,
        ),
    )
