from collections.abc import Callable

from pydantic import Field

from core.dimension.application.commands.evaluate import dimension
from core.dimension.domain.formula import evaluate_product
from core.rootsys.domain.cartan import CartanType
from core.shared_kernel.units_of_work.workspace import Workspace
from generic.api.pydantic_models import CamelCasedAliasesModel, Rational

type WorkspaceFactory = Callable[[CartanType], Workspace]


class FactorPayload(dimension.Payload):
    cartan_type: str = Field(description="Тип простого множителя, например \"A2\"")


class Payload(CamelCasedAliasesModel):
    factors: list[FactorPayload] = Field(min_length=1)


class ProductDTO(CamelCasedAliasesModel):
    value: Rational
    case: str
    factors: list[dimension.DimensionDTO]


class Command:
    """Формула для G = G_1 x ... x G_k: сумма значений по простым множителям."""

    def __init__(self, workspace_factory: WorkspaceFactory) -> None:
        self.workspace_factory = workspace_factory

    def execute(self, payload: Payload) -> ProductDTO:
        evaluated = [
            dimension.Command(self.workspace_factory(CartanType.parse(factor.cartan_type))).evaluate(factor)
            for factor in payload.factors
        ]
        product = evaluate_product([result for _, result in evaluated])
        return ProductDTO(
            value=product.value,
            case=product.case,
            factors=[dimension.to_dto(inp, result) for inp, result in evaluated],
        )
