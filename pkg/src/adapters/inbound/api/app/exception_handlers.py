from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from loguru import logger
from pydantic import ValidationError
from starlette import status
from starlette.requests import Request
from starlette.responses import JSONResponse, Response

from adapters.inbound.logging import log_domain_exception
from generic.domain.exceptions import (
    BudgetExceededError,
    DomainError,
    EntityFieldError,
    FieldErrorDetail,
    HypothesisError,
    NotFoundError,
    VerificationError,
)


def _handle_not_found_error(request: Request, exc: NotFoundError) -> Response:  # noqa: ARG001
    log_domain_exception(exc)
    return JSONResponse(exc.as_dict(), status_code=status.HTTP_404_NOT_FOUND)


def _handle_entity_field_error(request: Request, exc: EntityFieldError) -> Response:  # noqa: ARG001
    log_domain_exception(exc)
    return JSONResponse(exc.as_dict(), status_code=status.HTTP_400_BAD_REQUEST)


def _handle_hypothesis_error(request: Request, exc: HypothesisError) -> Response:  # noqa: ARG001
    """Нарушено условие применимости: измеренное и требуемое значения отдаются клиенту."""
    log_domain_exception(exc)
    return JSONResponse(exc.as_dict(include_tech_details=True), status_code=status.HTTP_400_BAD_REQUEST)


def _handle_budget_exceeded_error(request: Request, exc: BudgetExceededError) -> Response:  # noqa: ARG001
    log_domain_exception(exc)
    return JSONResponse(exc.as_dict(include_tech_details=True), status_code=status.HTTP_422_UNPROCESSABLE_ENTITY)


def _handle_verification_error(request: Request, exc: VerificationError) -> Response:  # noqa: ARG001
    log_domain_exception(exc)
    return JSONResponse(exc.as_dict(), status_code=status.HTTP_409_CONFLICT)


def _handle_domain_error(request: Request, exc: DomainError) -> Response:  # noqa: ARG001
    log_domain_exception(exc)
    return JSONResponse(exc.as_dict(), status_code=status.HTTP_400_BAD_REQUEST)


def handle_validation_error(request: Request, exc: RequestValidationError | ValidationError) -> Response:  # noqa: ARG001
    """Обработчик исключений валидации (Pydantic)."""
    logger.info(repr(exc))
    err = exc.errors()[0]

    msg = f"Ошибка валидации: {err['msg']}"
    field = str(err["loc"][-1] or "") if err["loc"] else ""
    domain_error = DomainError(msg, field_errors=[FieldErrorDetail(field=field, message=msg)])
    return JSONResponse(domain_error.as_dict(), status_code=status.HTTP_400_BAD_REQUEST)


def handle_unexpected_error(request: Request, exc: Exception) -> Response:  # noqa: ARG001
    """Обработчик всех остальных исключений."""
    logger.exception(exc)
    err_content = {"message": "Непредвиденная ошибка вычисления"}
    return JSONResponse(err_content, status_code=status.HTTP_500_INTERNAL_SERVER_ERROR)


def register_common_exception_handlers(app: FastAPI) -> None:
    """Инициализация обработчиков исключений.
    Вызывается в adapters.inbound.api.app.app.create_app
    """
    app.add_exception_handler(NotFoundError, _handle_not_found_error)
    app.add_exception_handler(EntityFieldError, _handle_entity_field_error)
    app.add_exception_handler(HypothesisError, _handle_hypothesis_error)
    app.add_exception_handler(BudgetExceededError, _handle_budget_exceeded_error)
    app.add_exception_handler(VerificationError, _handle_verification_error)
    app.add_exception_handler(DomainError, _handle_domain_error)
    app.add_exception_handler(RequestValidationError, handle_validation_error)
    app.add_exception_handler(ValidationError, handle_validation_error)
    app.add_exception_handler(Exception, handle_unexpected_error)
