from collections.abc import Sequence
from functools import cached_property, lru_cache

from adapters.config.settings import BudgetSettings
from core.affine.domain.group import AffineGroup
from core.affine.domain.level import LevelData, LevelType, spherical_levels
from core.affine.domain.omega import OmegaGroup
from core.qbg.domain.graph import QuantumBruhatGraph
from core.rootsys.domain.cartan import CartanType, group_order
from core.rootsys.domain.root_system import RootSystem, build_root_system
from core.rootsys.domain.types import Lattice
from core.weyl.domain.conjugacy import InvolutionConjugacy
from core.weyl.domain.group import WeylGroup
from generic.domain.exceptions import BudgetExceededError, DomainError
from generic.units_of_work.base import BaseUnitOfWork


@lru_cache(maxsize=32)
def _weyl_group(cartan_type: CartanType, max_group_size: int) -> WeylGroup:
    return WeylGroup(build_root_system(cartan_type), max_group_size=max_group_size)


@lru_cache(maxsize=32)
def _affine_group(cartan_type: CartanType, max_group_size: int, lattice: Lattice) -> AffineGroup:
    return AffineGroup(_weyl_group(cartan_type, max_group_size), lattice)


@lru_cache(maxsize=16)
def _quantum_bruhat_graph(
    cartan_type: CartanType, max_group_size: int, bfs_cache_size: int, path_cap: int
) -> QuantumBruhatGraph:
    return QuantumBruhatGraph(_weyl_group(cartan_type, max_group_size), bfs_cache_size, path_cap)


@lru_cache(maxsize=32)
def _conjugacy(cartan_type: CartanType, max_group_size: int, orbit_bound: int) -> InvolutionConjugacy:
    return InvolutionConjugacy(_weyl_group(cartan_type, max_group_size), orbit_bound)


class Workspace(BaseUnitOfWork):
    """Рабочая область одного типа Картана и решётки.

    Движки строятся лениво и кэшируются между рабочими областями по (тип, бюджеты).
    """

    def __init__(self, cartan_type: CartanType, budget: BudgetSettings, lattice: Lattice = "adjoint") -> None:
        super().__init__()
        self.cartan_type = cartan_type
        self.budget = budget
        self.lattice = lattice
        self.roots_engine: RootSystem
        self.weyl_engine: WeylGroup
        self.affine_engine: AffineGroup

    def _init_engines(self) -> None:
        """Инициализирует движки."""
        self.roots_engine = build_root_system(self.cartan_type)
        self.weyl_engine = _weyl_group(self.cartan_type, self.budget.max_group_size)
        self.affine_engine = _affine_group(self.cartan_type, self.budget.max_group_size, self.lattice)

    @property
    def qbg(self) -> QuantumBruhatGraph:
        """Квантовый граф Брюа; требует полного перечисления W."""
        budget = self.budget
        return _quantum_bruhat_graph(self.cartan_type, budget.max_group_size, budget.bfs_cache_size, budget.path_cap)

    @property
    def conjugacy(self) -> InvolutionConjugacy:
        return _conjugacy(self.cartan_type, self.budget.max_group_size, self.budget.conjugacy_orbit_bound)

    @cached_property
    def omega(self) -> OmegaGroup:
        return OmegaGroup(self.affine_engine)

    def level(self, level: LevelType) -> LevelData:
        return LevelData(self.affine_engine, level)

    def parse_level(self, text: str) -> LevelData:
        return self.level(LevelType.parse(text, self.cartan_type.rank))

    def select_levels(self, texts: Sequence[str], all_levels: bool, with_affine: bool) -> list[LevelType]:
        """Уровни из аргументов; при all_levels все сферические J, без аргументов - уровень Ивахори."""
        if all_levels:
            return spherical_levels(self.roots_engine, with_affine)
        if not texts:
            return [LevelType(frozenset())]
        return [LevelType.parse(text, self.cartan_type.rank) for text in texts]

    def _transform_resource_error_to_domain(self, exc: BaseException) -> DomainError:
        """Переполнение стека или памяти при переборе - превышение бюджета группы."""
        return BudgetExceededError(
            f"Перебор для {self.cartan_type} прерван ({type(exc).__name__})",
            setting="max_group_size",
            limit=self.budget.max_group_size,
            measured=group_order(self.cartan_type),
        )
