from generic.domain.exceptions import EntityFieldError, HypothesisError

NEWTON_DATUM_ENTITY = "NewtonDatum"
DIM_INPUT_ENTITY = "DimInput"

NEUTRAL_ACCEPTABILITY = "κ([b])=μ^♮, ν([b])≤μ"


class NewtonDatumError(EntityFieldError):
    entity = NEWTON_DATUM_ENTITY


class NotNeutrallyAcceptableError(HypothesisError):
    """[b] не лежит в B(G, mu)."""

    def __init__(self, message: str, **kwargs) -> None:
        kwargs.setdefault("entity", DIM_INPUT_ENTITY)
        super().__init__(f"{message} (требуется {NEUTRAL_ACCEPTABILITY})", **kwargs)


class DepthHypothesisError(HypothesisError):
    """Глубина mu меньше порога замкнутой формулы."""

    def __init__(self, message: str, **kwargs) -> None:
        kwargs.setdefault("entity", DIM_INPUT_ENTITY)
        super().__init__(message, **kwargs)
