from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Literal

from loguru import logger

from core.affine.domain.admissible import above_one, j_admissible
from core.affine.domain.element import AffineElem
from core.affine.domain.group import AffineGroup
from core.affine.domain.level import LevelData, LevelType
from core.affine.domain.omega import OmegaGroup
from core.dimension.domain.exceptions import DepthHypothesisError
from core.dimension.domain.newton import NewtonDatum
from core.dimension.domain.virtual import virtual_dimension
from core.qbg.domain.graph import QuantumBruhatGraph
from core.rootsys.domain.exceptions import CoweightError
from core.rootsys.domain.root_system import CoweightQ, depth, dominance_le, rho_pairing
from core.theorems.domain.min_distance import min_distance_scan
from core.weyl.domain.element import WeylElem
from generic.utils.parallel import partitioned_map

type DimCase = Literal["i", "ii", "iii", "none"]
type GapVariant = Literal["wt", "2rho+wt", "2rho", "none"]

# Порядок от самого сильного вывода к отсутствию гарантии.
CASE_ORDER: tuple[DimCase, ...] = ("i", "ii", "iii", "none")


@dataclass(frozen=True)
class DimInput:
    affine: AffineGroup
    level: LevelType
    mu: CoweightQ
    b: NewtonDatum

    def __post_init__(self) -> None:
        if not self.mu.is_dominant:
            raise CoweightError(f"Кохарактер mu = {self.mu} не доминантный", field="mu", id=str(self.mu))
        if not self.mu.is_integral(self.affine.lattice):
            raise CoweightError(
                f"Кохарактер mu = {self.mu} не лежит в решётке {self.affine.lattice}", field="mu", id=str(self.mu)
            )

    @cached_property
    def level_data(self) -> LevelData:
        return LevelData(self.affine, self.level)

    def check_acceptable(self) -> None:
        self.b.check_acceptable(self.mu, self.affine.lattice)


def rho_term(inp: DimInput) -> Fraction:
    """<rho, mu - nu(b)> - 1/2 def(b)."""
    return rho_pairing(inp.mu - inp.b.nu) - Fraction(inp.b.defect, 2)


def formula_bracket(level: LevelData) -> Fraction:
    """1/2 [{l(w_0) - l_R(w_0)} - {l(w_J) - l_R(w_J)}]."""
    weyl = level.affine.weyl
    return Fraction(weyl.w0.length - weyl.reflection_length(weyl.w0) - level.excess, 2)


def formula_value(inp: DimInput) -> Fraction:
    return rho_term(inp) + formula_bracket(inp.level_data)


def closed_form_threshold(level: LevelData) -> int:
    """Порог глубины: 4 при J ⊆ S, иначе 2 l(w_0) + 2."""
    return 4 if level.level.is_finite_part else 2 * level.affine.weyl.w0.length + 2


def d_adm_closed_form(
    inp: DimInput, qbg: QuantumBruhatGraph, threads: int = 1, min_value: int | None = None
) -> Fraction:
    """<rho, mu - nu> - 1/2 def + 1/2 l(w_0) - 1/2 min{d(x, x w_0) : x in ^J W}."""
    inp.check_acceptable()
    level = inp.level_data
    measured, required = depth(inp.mu), closed_form_threshold(level)
    if measured < required:
        raise DepthHypothesisError(
            f"depth(mu) = {measured} меньше порога {required} для уровня {inp.level}",
            measured=measured,
            required=required,
            id=str(inp.mu),
        )
    if min_value is None:
        min_value = min_distance_scan(qbg, level, threads).min_value
    return rho_term(inp) + Fraction(qbg.weyl.w0.length - min_value, 2)


@dataclass(frozen=True, slots=True)
class AdmMaximum:
    """Максимум d_w(b) по ^J Adm(mu) и по части _{>1} (для J с аффинным узлом)."""

    value: Fraction
    argmax: AffineElem
    size: int
    above_one: Fraction | None


def _ordered(elements: Iterable[AffineElem]) -> list[AffineElem]:
    return sorted(elements, key=lambda w: (w.length, w.translation, w.finite.word))


def d_adm_brute(inp: DimInput, adm_cap: int, threads: int = 1) -> AdmMaximum:
    """max_{w in ^J Adm(mu)} d_w(b) полным перебором."""
    inp.check_acceptable()
    translation = tuple(int(p) for p in inp.mu.fundamental)
    elements = _ordered(j_admissible(inp.affine, translation, inp.level, adm_cap))

    def evaluate(part: Sequence[AffineElem]) -> list[Fraction]:
        return [virtual_dimension(w, inp.b) for w in part]

    values = partitioned_map(evaluate, elements, threads)
    best = max(range(len(elements)), key=lambda k: values[k])
    upper = None
    if not inp.level.is_finite_part:
        restricted = above_one(frozenset(elements))
        upper = max((v for w, v in zip(elements, values) if w in restricted), default=None)
    logger.debug("|^J Adm(mu)| = {}, максимум {} для J={}", len(elements), values[best], inp.level)
    return AdmMaximum(values[best], elements[best], len(elements), upper)


@dataclass(frozen=True, slots=True)
class RegularityReport:
    depth: Fraction
    # 2l(w_0)+2
    deep_threshold: int

    def regular(self, k: int) -> bool:
        return self.depth >= k + 1

    @property
    def two_regular(self) -> bool:
        return self.regular(2)

    @property
    def four_regular(self) -> bool:
        return self.regular(4)

    @property
    def deep_regular(self) -> bool:
        return self.regular(self.deep_threshold)


@dataclass(frozen=True, slots=True)
class GapReport:
    """mu >= nu(b) + wt(w_0, 1); mu >= nu(b) + 2rho^vee + wt(w_0, 1); mu >= nu(b) + 2rho^vee."""

    iwahori: bool
    parahoric: bool
    relaxed: bool
    variant: GapVariant = "none"


@dataclass(frozen=True, slots=True)
class LevelReduction:
    tau: str | None
    image: LevelType | None

    @property
    def avoids_special(self) -> bool:
        return self.image is not None


@dataclass(frozen=True, slots=True)
class DimensionResult:
    value: Fraction
    case: DimCase
    regularity: RegularityReport
    gap: GapReport
    level_reduction: LevelReduction


def _gap(inp: DimInput, wt_w0: CoweightQ) -> GapReport:
    mu, nu = inp.mu, inp.b.nu
    two_rho = inp.affine.system.rho_check * 2
    return GapReport(
        iwahori=dominance_le(nu + wt_w0, mu),
        parahoric=dominance_le(nu + two_rho + wt_w0, mu),
        relaxed=dominance_le(nu + two_rho, mu),
    )


def _reduce_level(omega: OmegaGroup, level: LevelType) -> LevelReduction:
    found = omega.transport_into_finite(level)
    if found is None:
        return LevelReduction(None, None)
    tau, image = found
    return LevelReduction(str(tau), image)


def dim_formula(inp: DimInput, qbg: QuantumBruhatGraph, omega: OmegaGroup) -> DimensionResult:
    """Значение формулы размерности и случай (i)-(iii), в котором оно равно dim X(mu, b)_J."""
    inp.check_acceptable()
    weyl = qbg.weyl
    value = formula_value(inp)
    regularity = RegularityReport(depth(inp.mu), 2 * weyl.w0.length + 2)
    gap = _gap(inp, qbg.weight_coweight(weyl.w0, weyl.identity))
    reduction = _reduce_level(omega, inp.level)
    relaxed_allowed = inp.affine.system.cartan_type.family in "ABC"

    case: DimCase = "none"
    variant: GapVariant = "none"
    if not inp.level.nodes and regularity.two_regular and gap.iwahori:
        case, variant = "i", "wt"
    elif regularity.four_regular and reduction.avoids_special and gap.parahoric:
        case, variant = "ii", "2rho+wt"
    elif regularity.four_regular and reduction.avoids_special and relaxed_allowed and gap.relaxed:
        case, variant = "ii", "2rho"
    elif regularity.deep_regular and gap.parahoric:
        case, variant = "iii", "2rho+wt"
    logger.debug("Формула для {} J={}: {} (случай {})", inp.affine.system, inp.level, value, case)
    return DimensionResult(
        value=value,
        case=case,
        regularity=regularity,
        gap=GapReport(gap.iwahori, gap.parahoric, gap.relaxed, variant),
        level_reduction=reduction,
    )


@dataclass(frozen=True, slots=True)
class ProductResult:
    value: Fraction
    case: DimCase
    factors: tuple[DimensionResult, ...]


def evaluate_product(factors: Sequence[DimensionResult]) -> ProductResult:
    """G = G_1 x ... x G_k: значения складываются, случай - самый слабый из случаев множителей."""
    case = max((factor.case for factor in factors), key=CASE_ORDER.index, default="i")
    return ProductResult(sum((factor.value for factor in factors), Fraction(0)), case, tuple(factors))


def iwahori_witness(affine: AffineGroup, qbg: QuantumBruhatGraph, mu: CoweightQ) -> AffineElem:
    """w_0 t^{mu - wt(w_0, 1)}."""
    weyl = affine.weyl
    shift = mu - qbg.weight_coweight(weyl.w0, weyl.identity)
    return affine.finite(weyl.w0) * affine.translation_of(shift)


def parahoric_witness(affine: AffineGroup, qbg: QuantumBruhatGraph, mu: CoweightQ, x: WeylElem) -> AffineElem:
    """x t^{mu - wt(x, x w_0)} w_0 x^{-1}."""
    w0 = affine.weyl.w0
    shift = mu - qbg.weight_coweight(x, x * w0)
    return affine.finite(x) * affine.translation_of(shift) * affine.finite(w0 * x.inverse)


def iwahori_witness_below(affine: AffineGroup, qbg: QuantumBruhatGraph, mu: CoweightQ) -> bool:
    """t^{mu - wt(w_0, 1)} <= t^mu w_0."""
    weyl = affine.weyl
    lower = affine.translation_of(mu - qbg.weight_coweight(weyl.w0, weyl.identity))
    upper = affine.translation_of(mu) * affine.finite(weyl.w0)
    return bool(affine.bruhat_le(lower, upper))
