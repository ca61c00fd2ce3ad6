from core.shared_kernel.units_of_work.workspace import Workspace
from generic.api.pydantic_models import CamelCasedAliasesModel, Rational
from query.qbg.handlers.weight import format_fundamental_combination


class LongestElementDTO(CamelCasedAliasesModel):
    w0: str
    length: int
    weight: list[int]
    weight_fundamental: list[Rational]
    expression: str
    distance: int
    reflection_length: int


class Handler:
    """wt(w_0, 1), d(w_0, 1) и l_R(w_0)."""

    def __init__(self, workspace: Workspace) -> None:
        self.workspace = workspace

    def execute(self) -> LongestElementDTO:
        with self.workspace as workspace:
            weyl, qbg = workspace.weyl_engine, workspace.qbg
            w0 = weyl.w0
            weight = qbg.weight_coweight(w0, weyl.identity)
            return LongestElementDTO(
                w0=str(w0),
                length=w0.length,
                weight=list(qbg.wt_w0_1),
                weight_fundamental=list(weight.fundamental),
                expression=format_fundamental_combination(weight.fundamental),
                distance=qbg.d_w0_1,
                reflection_length=weyl.reflection_length(w0),
            )
