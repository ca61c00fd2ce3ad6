from fractions import Fraction
from typing import Annotated, Any

import humps
from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer, WithJsonSchema


def format_fraction(value: Fraction | int) -> str:
    """Точная запись рационального числа: "7", "-1/2"."""
    return str(Fraction(value))


def _to_fraction(value: Any) -> Any:
    return Fraction(value) if isinstance(value, int | str | Fraction) else value


# Рациональное число, сериализуемое строкой "p/q" (без десятичных приближений).
Rational = Annotated[
    Fraction,
    BeforeValidator(_to_fraction),
    PlainSerializer(format_fraction, return_type=str),
    WithJsonSchema({"type": "string", "examples": ["7", "1/2"]}),
]


class CamelCasedAliasesModel(BaseModel):
    """Класс для подключения camelCase псевдонимов во внешних представлениях.

    Используется как payload команд, DTO запросов и request/response модель API.
    Пример:
        class FooRequest(CamelCasedAliasesModel):
            cartan_type: str
            max_group_size: int

        >>> FooRequest(cartanType='A2', maxGroupSize=10)
        FooRequest(cartan_type='A2', max_group_size=10)

        >>> foo = FooRequest(cartan_type='A2', max_group_size=10)
        >>> foo.model_dump(by_alias=True)
        {'cartanType': 'A2', 'maxGroupSize': 10}
    """

    model_config = ConfigDict(
        populate_by_name=True, alias_generator=humps.camelize, from_attributes=True, arbitrary_types_allowed=True
    )

