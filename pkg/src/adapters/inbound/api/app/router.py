from fastapi import APIRouter

from adapters.inbound.api.controllers.dimension import router as dimension_router
from adapters.inbound.api.controllers.qbg import router as qbg_router

api_router = APIRouter()
api_router.include_router(qbg_router.router)
api_router.include_router(dimension_router.router)
