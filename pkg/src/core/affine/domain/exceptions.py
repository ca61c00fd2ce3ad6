from generic.domain.exceptions import EntityFieldError

LEVEL_TYPE_ENTITY = "LevelType"
AFFINE_ELEM_ENTITY = "AffineElem"


class LevelTypeError(EntityFieldError):
    entity = LEVEL_TYPE_ENTITY


class NonSphericalLevelError(LevelTypeError):
    """W~_J бесконечна."""


class AffineElemError(EntityFieldError):
    entity = AFFINE_ELEM_ENTITY


class NonIntegralCoweightError(AffineElemError):
    """Сдвиг не лежит в выбранной решётке кохарактеров."""
