from generic.domain.exceptions import EntityFieldError

WEYL_ELEM_ENTITY = "WeylElem"
PARABOLIC_ENTITY = "ParabolicSubset"


class WeylElemError(EntityFieldError):
    entity = WEYL_ELEM_ENTITY


class NotInvolutionError(WeylElemError):
    """Проверка сопряжённости определена только для инволюций."""


class ParabolicSubsetError(EntityFieldError):
    entity = PARABOLIC_ENTITY
