from collections.abc import Sequence
from fractions import Fraction

from core.shared_kernel.units_of_work.workspace import Workspace
from generic.api.pydantic_models import CamelCasedAliasesModel, Rational


class WeightDTO(CamelCasedAliasesModel):
    x: str
    y: str
    weight: list[int]
    weight_fundamental: list[Rational]
    expression: str


def format_fundamental_combination(fundamental: Sequence[Fraction | int]) -> str:
    """Запись кохарактера через фундаментальные кохарактеры: "ϖ2∨+ϖ3∨", "2ϖ1∨-1/2ϖ3∨", "0"."""
    terms = []
    for node, coefficient in enumerate(fundamental, start=1):
        if not coefficient:
            continue
        sign = "-" if coefficient < 0 else "+"
        magnitude = abs(Fraction(coefficient))
        prefix = "" if magnitude == 1 else str(magnitude)
        terms.append(f"{sign}{prefix}ϖ{node}∨")
    if not terms:
        return "0"
    joined = "".join(terms)
    return joined.removeprefix("+")


class Handler:
    """Вес wt(x, y): в базисе простых кокорней и через фундаментальные кохарактеры."""

    def __init__(self, workspace: Workspace) -> None:
        self.workspace = workspace

    def execute(self, x: str, y: str) -> WeightDTO:
        with self.workspace as workspace:
            weyl, qbg = workspace.weyl_engine, workspace.qbg
            source, target = weyl.parse(x), weyl.parse(y)
            weight = qbg.weight_coweight(source, target)
            return WeightDTO(
                x=str(source),
                y=str(target),
                weight=[int(c) for c in weight.coords],
                weight_fundamental=list(weight.fundamental),
                expression=format_fundamental_combination(weight.fundamental),
            )
