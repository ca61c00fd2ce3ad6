from typing import Annotated

from fastapi import Path
from starlette.requests import Request

from core.dimension.application.commands.evaluate.product import WorkspaceFactory
from core.rootsys.domain.cartan import CartanType
from core.shared_kernel.units_of_work.workspace import Workspace


def get_workspace_factory(request: Request) -> WorkspaceFactory:
    """Фабрика рабочих областей с бюджетами и решёткой приложения."""
    state = request.app.state
    return lambda cartan_type: Workspace(cartan_type, state.budget, state.lattice)


def get_workspace(request: Request, cartan_type: Annotated[str, Path(examples=["A2", "C3"])]) -> Workspace:
    """Рабочая область типа из пути запроса."""
    return get_workspace_factory(request)(CartanType.parse(cartan_type))
