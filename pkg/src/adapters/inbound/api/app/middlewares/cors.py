from fastapi import FastAPI
from loguru import logger
from starlette.middleware.cors import CORSMiddleware


def setup_cors(app: FastAPI) -> None:
    """Запросы с любых источников, только GET и POST."""
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["GET", "POST"], allow_headers=["*"])
    logger.debug("CORS Middleware добавлена")
