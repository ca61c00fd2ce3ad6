from pydantic import Field

from core.shared_kernel.units_of_work.workspace import Workspace
from generic.api.pydantic_models import CamelCasedAliasesModel


class DistanceDTO(CamelCasedAliasesModel):
    x: str
    y: str
    distance: int
    path: list[str] = Field(description="Один кратчайший путь, вершины словами")


class Handler:
    """Расстояние d(x, y) в квантовом графе Брюа."""

    def __init__(self, workspace: Workspace) -> None:
        self.workspace = workspace

    def execute(self, x: str, y: str) -> DistanceDTO:
        with self.workspace as workspace:
            weyl, qbg = workspace.weyl_engine, workspace.qbg
            source, target = weyl.parse(x), weyl.parse(y)
            path = qbg.shortest_path(source, target)
            return DistanceDTO(
                x=str(source),
                y=str(target),
                distance=len(path) - 1,
                path=[str(qbg.element(index)) for index in path],
            )
