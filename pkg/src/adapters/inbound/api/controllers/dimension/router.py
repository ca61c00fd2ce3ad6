from typing import Annotated

from fastapi import APIRouter, Body, Depends

from adapters.inbound.api.app.dependencies import get_workspace_factory
from core.dimension.application.commands.evaluate import dimension, product
from core.dimension.application.commands.evaluate.product import WorkspaceFactory
from core.rootsys.domain.cartan import CartanType

router = APIRouter(prefix="/dimension", tags=["dimension"])


@router.post(path="", summary="Формула размерности dim X(mu, b)_J и проверка гипотез")
def evaluate_dimension_controller(
    body: Annotated[product.FactorPayload, Body()],
    factory: Annotated[WorkspaceFactory, Depends(get_workspace_factory)],
) -> dimension.DimensionDTO:
    workspace = factory(CartanType.parse(body.cartan_type))
    return dimension.Command(workspace).execute(body)


@router.post(path="/product", summary="Формула для произведения простых множителей")
def evaluate_product_controller(
    body: Annotated[product.Payload, Body()],
    factory: Annotated[WorkspaceFactory, Depends(get_workspace_factory)],
) -> product.ProductDTO:
    return product.Command(factory).execute(body)
