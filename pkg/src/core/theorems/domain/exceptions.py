from generic.domain.exceptions import EntityFieldError, NotFoundError, VerificationError

THEOREM_INPUT_ENTITY = "TheoremInput"
TABLE_ROW_ENTITY = "ExceptionalTableRow"


class TheoremInputError(EntityFieldError):
    entity = THEOREM_INPUT_ENTITY


class UnsupportedCartanTypeError(TheoremInputError):
    """Построение определено не для всех типов."""


class TableRowNotFoundError(NotFoundError):
    entity = TABLE_ROW_ENTITY


class DecompositionNotFoundError(VerificationError):
    """Не найдено сертифицированное хорошее разложение w_0."""

    def __init__(self, message: str, **kwargs) -> None:
        kwargs.setdefault("entity", "GoodDecomposition")
        super().__init__(message, **kwargs)
