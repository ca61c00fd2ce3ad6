from generic.domain.exceptions import EntityFieldError

CARTAN_TYPE_ENTITY = "CartanType"
COWEIGHT_ENTITY = "Coweight"
ROOT_ENTITY = "Root"


class CartanTypeError(EntityFieldError):
    entity = CARTAN_TYPE_ENTITY


class CoweightError(EntityFieldError):
    entity = COWEIGHT_ENTITY


class RootError(EntityFieldError):
    entity = ROOT_ENTITY


class RootSystemMismatchError(EntityFieldError):
    """Аргументы относятся к разным системам корней."""

    entity = CARTAN_TYPE_ENTITY
