from collections.abc import Callable

import pytest

from adapters.config.settings import BudgetSettings
from core.rootsys.domain.cartan import CartanType
from core.rootsys.domain.types import Lattice
from core.shared_kernel.units_of_work.workspace import Workspace

type OpenWorkspace = Callable[..., Workspace]


@pytest.fixture(scope="session")
def budget() -> BudgetSettings:
    return BudgetSettings(threads=1)


@pytest.fixture(scope="session")
def open_workspace(budget: BudgetSettings) -> OpenWorkspace:
    """Рабочая область с инициализированными движками; движки кэшируются между тестами."""

    def factory(type_text: str, lattice: Lattice = "adjoint") -> Workspace:
        workspace = Workspace(CartanType.parse(type_text), budget, lattice)
        return workspace.__enter__()

    return factory


@pytest.fixture(scope="session")
def a1(open_workspace: OpenWorkspace) -> Workspace:
    return open_workspace("A1")


@pytest.fixture(scope="session")
def a2(open_workspace: OpenWorkspace) -> Workspace:
    return open_workspace("A2")


@pytest.fixture(scope="session")
def a3(open_workspace: OpenWorkspace) -> Workspace:
    return open_workspace("A3")


@pytest.fixture(scope="session")
def b2(open_workspace: OpenWorkspace) -> Workspace:
    return open_workspace("B2")


@pytest.fixture(scope="session")
def c2(open_workspace: OpenWorkspace) -> Workspace:
    return open_workspace("C2")


@pytest.fixture(scope="session")
def g2(open_workspace: OpenWorkspace) -> Workspace:
    return open_workspace("G2")


@pytest.fixture
def new_workspace(budget: BudgetSettings) -> OpenWorkspace:
    """Рабочая область без входа: для команд, которые сами открывают и закрывают её."""

    def factory(type_text: str, lattice: Lattice = "adjoint") -> Workspace:
        return Workspace(CartanType.parse(type_text), budget, lattice)

    return factory
