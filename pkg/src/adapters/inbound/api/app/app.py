from collections.abc import AsyncGenerator
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.responses import ORJSONResponse
from loguru import logger

from __version__ import __version__
from adapters.config.settings import settings
from adapters.inbound.api.app.exception_handlers import register_common_exception_handlers
from adapters.inbound.api.app.middlewares.cors import setup_cors
from adapters.inbound.api.app.router import api_router


@asynccontextmanager
async def _lifespan(app: FastAPI) -> AsyncGenerator[None]:
    """Бюджеты и решётка читаются из настроек один раз на запуск приложения."""
    app.state.budget = settings.budget
    app.state.lattice = settings.algebra.lattice
    logger.info("Приложение настроено: решётка {}, |W| <= {}", app.state.lattice, app.state.budget.max_group_size)
    yield  # Приложение работает здесь
    logger.info("Приложение остановлено")


def create_app() -> FastAPI:
    app = FastAPI(
        title="qbg-parahoric",
        version=__version__,
        lifespan=_lifespan,
        swagger_ui_parameters={
            "defaultModelsExpandDepth": 0,  # Скрыть модели по умолчанию
            "filter": True,  # Включить фильтр по тегам
            "displayRequestDuration": True,  # Показать длительность запроса
        },
        default_response_class=ORJSONResponse,
    )
    setup_cors(app)
    app.include_router(api_router)
    register_common_exception_handlers(app)
    return app
