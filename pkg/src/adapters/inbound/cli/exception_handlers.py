import sys

import orjson
from loguru import logger
from pydantic import ValidationError

from adapters.inbound.logging import log_domain_exception
from generic.domain.exceptions import DomainError, FieldErrorDetail

# Код возврата при ошибке ввода вне иерархии DomainError.
INPUT_ERROR_EXIT_CODE = 2


def _report(payload: dict) -> None:
    sys.stderr.write(orjson.dumps(payload).decode() + "\n")


def handle_domain_error(exc: DomainError) -> int:
    """Ошибка домена: лог, описание в stderr и код возврата класса ошибки."""
    log_domain_exception(exc)
    _report(exc.as_dict())
    return exc.exit_code


def handle_validation_error(exc: ValidationError) -> int:
    """Ошибка валидации payload команды."""
    logger.info(repr(exc))
    err = exc.errors()[0]
    msg = f"Ошибка валидации: {err['msg']}"
    field = str(err["loc"][-1]) if err["loc"] else ""
    domain_error = DomainError(msg, field_errors=[FieldErrorDetail(field=field, message=msg)])
    _report(domain_error.as_dict())
    return INPUT_ERROR_EXIT_CODE
