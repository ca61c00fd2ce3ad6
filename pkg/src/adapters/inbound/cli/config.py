from typing import Any, Self

from pydantic import BaseModel, Field

from adapters.config.settings import BudgetSettings, OutputFormat, settings
from core.rootsys.domain.cartan import CartanType
from core.rootsys.domain.types import Lattice
from core.shared_kernel.units_of_work.workspace import Workspace

# Версия формата вывода; меняется при несовместимых изменениях колонок.
SCHEMA_VERSION = 1

_AFFINE_SUFFIXES = ("aff", "~")

# Бюджеты, не влияющие на результат, в заголовок не попадают.
_HEADER_EXCLUDE = frozenset({"threads", "bfs_cache_size"})


class RunConfig(BaseModel):
    """Действующая конфигурация запуска: тип, решётка, бюджеты и формат вывода."""

    cartan_type: str
    with_affine: bool = False
    lattice: Lattice = Field(default_factory=lambda: settings.algebra.lattice)
    budget: BudgetSettings = Field(default_factory=lambda: settings.budget)
    format: OutputFormat = Field(default_factory=lambda: settings.output.format)

    @classmethod
    def from_args(cls, type_text: str, lattice: Lattice | None, output: OutputFormat | None, **budget: Any) -> Self:
        """Флаги командной строки поверх настроек из окружения; None - значение не задано."""
        overrides = {name: value for name, value in budget.items() if value is not None}
        return cls(
            cartan_type=type_text,
            with_affine=type_text.strip().lower().endswith(_AFFINE_SUFFIXES),
            lattice=lattice or settings.algebra.lattice,
            budget=settings.budget.model_copy(update=overrides),
            format=output or settings.output.format,
        )

    @property
    def factor_types(self) -> list[str]:
        """Простые множители типа "A2xB2"."""
        return [part for part in self.cartan_type.lower().split("x") if part.strip()]

    def workspace(self, cartan_type: CartanType | None = None) -> Workspace:
        return Workspace(cartan_type or CartanType.parse(self.cartan_type), self.budget, self.lattice)

    def echo(self) -> dict[str, Any]:
        budget = self.budget.model_dump(exclude=set(_HEADER_EXCLUDE))
        return {"type": self.cartan_type, "lattice": self.lattice, "format": self.format} | budget

    def header(self) -> list[str]:
        config = " ".join(f"{key}={value}" for key, value in self.echo().items())
        return [f"# schema: {SCHEMA_VERSION}", f"# config: {config}"]
