from pydantic import BaseModel, Field

from core.shared_kernel.units_of_work.workspace import Workspace
from generic.api.pydantic_models import CamelCasedAliasesModel


class Payload(BaseModel):
    lower: str | None = Field(default=None, description="Нижняя граница интервала Брюа")
    upper: str | None = Field(default=None, description="Верхняя граница интервала Брюа")


class PairDTO(CamelCasedAliasesModel):
    x: str
    y: str
    distance: int
    weight: list[int]


class TableDTO(CamelCasedAliasesModel):
    cartan_type: str
    vertices: list[str]
    pairs: list[PairDTO]


class Handler:
    """Экспорт квантового графа Брюа: DOT или таблица (d, wt) на множестве вершин.

    Без границ берётся весь граф; с границами - интервал Брюа [lower, upper].
    """

    def __init__(self, workspace: Workspace) -> None:
        self.workspace = workspace

    def _vertices(self, payload: Payload) -> list[int] | None:
        if payload.lower is None and payload.upper is None:
            return None
        weyl = self.workspace.weyl_engine
        lower = weyl.parse(payload.lower) if payload.lower is not None else weyl.identity
        upper = weyl.parse(payload.upper) if payload.upper is not None else weyl.w0
        return self.workspace.qbg.interval(lower, upper)

    def dot(self, payload: Payload) -> str:
        with self.workspace as workspace:
            return workspace.qbg.to_dot(self._vertices(payload))

    def table(self, payload: Payload) -> TableDTO:
        with self.workspace as workspace:
            qbg = workspace.qbg
            vertices = self._vertices(payload)
            if vertices is None:
                vertices = list(range(len(qbg.weyl.elements)))
            pairs = [
                PairDTO(
                    x=str(qbg.element(source)),
                    y=str(qbg.element(target)),
                    distance=qbg.sweep_distance(source, target),
                    weight=list(qbg.sweep_weight(source, target)),
                )
                for source in vertices
                for target in vertices
            ]
            return TableDTO(
                cartan_type=str(workspace.cartan_type),
                vertices=[str(qbg.element(index)) for index in vertices],
                pairs=pairs,
            )
