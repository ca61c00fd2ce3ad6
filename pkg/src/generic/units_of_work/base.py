import abc
from types import TracebackType
from typing import Self

from loguru import logger

from generic.domain.exceptions import DomainError


class BaseUnitOfWork(abc.ABC):
    """Базовый класс рабочих областей: движки вычислений одного ограниченного контекста.

    Движки - атрибуты с суффиксом "_engine"; они поднимаются на входе и обнуляются на выходе.
    Сами движки кэшируются вне UoW, поэтому повторный вход дешёвый.
    """

    def __init__(self) -> None:
        self._engines_attrs: set[str] | None = None

    def __enter__(self) -> Self:
        """Вход контекстного менеджера."""
        self._init_engines()
        return self

    def __exit__(
        self,
        _exception_type: type[BaseException] | None,
        exception: BaseException | None,
        _traceback: TracebackType | None,
    ) -> None:
        """Выход из контекстного менеджера."""
        self._exit_engines()
        if isinstance(exception, (RecursionError, MemoryError)):
            raise self._transform_resource_error_to_domain(exception) from exception

    @abc.abstractmethod
    def _init_engines(self) -> None:
        """Инициализирует движки."""
        raise NotImplementedError

    def _get_engines_attrs(self) -> set[str]:
        """Возвращает названия атрибутов движков."""
        if self._engines_attrs is None:
            self._engines_attrs = {attr for attr in self.__dict__ if attr.endswith("_engine")}
        return self._engines_attrs

    def _exit_engines(self) -> None:
        """Выход для движков - обнуляет атрибуты движков."""
        for engine_attr in self._get_engines_attrs():
            setattr(self, engine_attr, None)

    def _transform_resource_error_to_domain(self, exc: BaseException) -> DomainError:
        """Исчерпание ресурсов оборачивает доменной ошибкой; переопределяется в наследниках."""
        logger.warning("Пользователю показана заглушка необработанной ошибки: {}", type(exc).__name__)
        return DomainError(f"Вычисление прервано: {type(exc).__name__}")
