import abc
from dataclasses import dataclass
from typing import Any

from humps import camelize

from generic.utils.log_levels import LogLevel


@dataclass
class FieldErrorDetail:
    """Детали ошибки с полем и сообщением."""

    message: str
    field: str

    def as_dict(self) -> dict[str, Any]:
        """Преобразует детали ошибки в словарь."""
        return {
            "field": camelize(self.field),
            "message": self.message,
        }


class DomainError(Exception):
    """Исключение предметной области."""

    exit_code: int = 2

    def __init__(
        self,
        message: str,
        *,
        id: Any | None = None,
        entity: str | None = None,
        tech_details: dict[str, Any] | None = None,
        log_level: LogLevel = LogLevel.INFO,
        field_errors: list[FieldErrorDetail] | None = None,
    ) -> None:
        """Инициализация.

        Args:
            message: Сообщение об ошибке.
            id: Идентификатор объекта (тип Картана, слово элемента и т.п.).
            entity: Системное имя сущности.
            tech_details: Детали ошибки для разработчиков.
            log_level: уровень логирования исключения.
            field_errors: Список ошибок, связанных с полями ввода.
        """
        self._message = message
        self.field_errors = field_errors or []
        self.id = str(id) if id is not None else None
        self._entity = entity
        self.tech_details = tech_details or {}
        self.log_level = log_level
        super().__init__(self.message)

    def as_dict(self, include_tech_details: bool = False) -> dict[str, Any]:
        """Ошибка в виде словаря для вывода пользователю."""
        base = {
            "error": self.__class__.__name__,
            "entity": self.entity,
            "id": self.id,
            "message": self.message,
            "field_errors": [error.as_dict() for error in self.field_errors],
        }

        return base | {"tech_details": self.tech_details} if include_tech_details else base

    @property
    def message(self) -> str:
        """Сообщение об ошибке."""
        return self._message

    @property
    def entity(self) -> str | None:
        """Системное имя сущности, если нужно для ошибки."""
        return self._entity


class EntityFieldError(DomainError):
    """Некорректное значение поля входных данных сущности."""

    def __init__(self, message: str, *, field: str | None = None, **kwargs: Any) -> None:
        field_errors = kwargs.pop("field_errors", None) or (
            [FieldErrorDetail(message=message, field=field)] if field else []
        )
        super().__init__(message, field_errors=field_errors, **kwargs)

    @property
    @abc.abstractmethod
    def entity(self) -> str:
        """Название класса сущности."""
        raise NotImplementedError


class NotFoundError(abc.ABC, DomainError):
    """Исключение в случае, если объект не найден.

    Пример:
        raise TableRowNotFoundError(id="E6:A1^2")
    """

    def __init__(
        self,
        id: Any,
        message: str = "",
        field_errors: list[FieldErrorDetail] | None = None,
        **kwargs: Any,
    ) -> None:
        super().__init__(message, id=id, field_errors=field_errors, **kwargs)

    @property
    @abc.abstractmethod
    def entity(self) -> str:
        """Наименование сущности."""
        raise NotImplementedError

    @property
    def message(self) -> str:
        """Сообщение об ошибке."""
        return self._message or f'Объект "{self.entity}" с id "{self.id}" не найден'


class HypothesisError(DomainError):
    """Нарушено условие применимости формулы (глубина, допустимость и т.п.)."""

    def __init__(self, message: str, *, measured: Any, required: Any, **kwargs: Any) -> None:
        tech_details = kwargs.pop("tech_details", {})
        tech_details.update({"measured": str(measured), "required": str(required)})
        self.measured = measured
        self.required = required
        super().__init__(message, tech_details=tech_details, log_level=LogLevel.WARNING, **kwargs)


class BudgetExceededError(DomainError):
    """Превышен настроенный бюджет вычислений."""

    exit_code = 3

    def __init__(self, message: str = "", *, setting: str, limit: int, measured: int, **kwargs: Any) -> None:
        """Инициализация.

        Args:
            message: Сообщение об ошибке.
            setting: Имя настройки, ограничивающей вычисление.
            limit: Текущее значение настройки.
            measured: Измеренный размер задачи.
            **kwargs: Дополнительные параметры для базового класса.
        """
        self.setting = setting
        self.limit = limit
        self.measured = measured
        tech_details = kwargs.pop("tech_details", {})
        tech_details.update({"setting": setting, "limit": limit, "measured": measured})
        super().__init__(
            message or f"Превышен бюджет {setting}: {measured} > {limit}; увеличьте значение настройки",
            entity="Budget",
            tech_details=tech_details,
            log_level=LogLevel.WARNING,
            **kwargs,
        )


class VerificationError(DomainError):
    """Проверяемое утверждение не подтвердилось на данном экземпляре."""

    exit_code = 1

    def __init__(self, message: str, **kwargs: Any) -> None:
        kwargs.setdefault("log_level", LogLevel.ERROR)
        super().__init__(message, **kwargs)
