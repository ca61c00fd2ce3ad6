from typing import Annotated

from fastapi import APIRouter, Depends, Query

from adapters.inbound.api.app.dependencies import get_workspace
from core.shared_kernel.units_of_work.workspace import Workspace
from query.qbg.handlers import distance, w0, weight

router = APIRouter(prefix="/qbg/{cartan_type}", tags=["qbg"])


@router.get(path="/distance", summary="Расстояние d(x, y) в квантовом графе Брюа")
def get_distance_controller(
    x: Annotated[str, Query(examples=["w0"])],
    y: Annotated[str, Query(examples=["e"])],
    workspace: Annotated[Workspace, Depends(get_workspace)],
) -> distance.DistanceDTO:
    return distance.Handler(workspace).execute(x, y)


@router.get(path="/weight", summary="Вес wt(x, y)")
def get_weight_controller(
    x: Annotated[str, Query(examples=["w0"])],
    y: Annotated[str, Query(examples=["e"])],
    workspace: Annotated[Workspace, Depends(get_workspace)],
) -> weight.WeightDTO:
    return weight.Handler(workspace).execute(x, y)


@router.get(path="/w0", summary="wt(w0, 1), d(w0, 1) и l_R(w0)")
def get_w0_controller(workspace: Annotated[Workspace, Depends(get_workspace)]) -> w0.LongestElementDTO:
    return w0.Handler(workspace).execute()
