from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from typing import Self

from core.dimension.domain.exceptions import NewtonDatumError, NotNeutrallyAcceptableError
from core.rootsys.domain.root_system import CoweightQ, RootSystem, dominance_le
from core.rootsys.domain.types import Lattice

type KottwitzClass = tuple[Fraction, ...]


def kottwitz_class(coweight: CoweightQ) -> KottwitzClass:
    """Образ в P^vee/Q^vee: дробные части координат в базисе простых кокорней."""
    return tuple(c - (c.numerator // c.denominator) for c in coweight.coords)


@dataclass(frozen=True, slots=True)
class NewtonDatum:
    """Инварианты класса [b]: точка Ньютона nu, точка Коттвица kappa и дефект def(b).

    kappa=None означает, что класс Коттвица берётся равным mu^♮.
    """

    nu: CoweightQ
    kappa: KottwitzClass | None
    defect: int

    def __post_init__(self) -> None:
        if not self.nu.is_dominant:
            raise NewtonDatumError(f"Точка Ньютона {self.nu} не доминантна", field="nu", id=str(self.nu))
        if not 0 <= self.defect <= self.nu.system.rank:
            raise NewtonDatumError(
                f"Дефект {self.defect} вне диапазона 0..{self.nu.system.rank}", field="defect", id=str(self.defect)
            )

    @classmethod
    def basic(cls, system: RootSystem) -> Self:
        """Базисный класс с nu = 0, kappa = mu^♮ и нулевым дефектом."""
        return cls(system.zero, None, 0)

    @property
    def system(self) -> RootSystem:
        return self.nu.system

    def check_acceptable(self, mu: CoweightQ, lattice: Lattice) -> None:
        """Нейтральная допустимость: kappa([b]) = mu^♮ и nu([b]) <= mu."""
        if lattice == "adjoint" and self.kappa is not None and self.kappa != kottwitz_class(mu):
            raise NotNeutrallyAcceptableError(
                f"Класс Коттвица {list(map(str, self.kappa))} не совпадает с образом mu",
                measured=list(map(str, self.kappa)),
                required=list(map(str, kottwitz_class(mu))),
                id=str(mu),
            )
        if not dominance_le(self.nu, mu):
            raise NotNeutrallyAcceptableError(
                f"Точка Ньютона {self.nu} не мажорируется mu = {mu}",
                measured=str(self.nu),
                required=f"<= {mu}",
                id=str(mu),
            )


def parse_kappa(system: RootSystem, text: str | None) -> KottwitzClass | None:
    """Разбирает "0" (тривиальный класс) или представителя в базисе простых кокорней."""
    if text is None or not text.strip():
        return None
    if text.strip() == "0":
        return (Fraction(0),) * system.rank
    return kottwitz_class(CoweightQ.parse(system, text))


def _slope_blocks(slopes: Sequence[Fraction]) -> list[tuple[Fraction, int]]:
    return [(slope, len(list(block))) for slope, block in groupby(slopes)]


def defect_type_A(n: int, slopes: Sequence[Fraction | int | str]) -> int:
    """def(b) для GL_n по наклонам многоугольника Ньютона.

    Наклон r/s (несократимая дробь), встречающийся m s раз, даёт блок кратности m;
    дефект равен n минус сумма кратностей.
    """
    values = [Fraction(slope) for slope in slopes]
    if len(values) != n:
        raise NewtonDatumError(f"Ожидалось {n} наклонов, получено {len(values)}", field="slopes", id=str(values))
    if any(a < b for a, b in zip(values, values[1:])):
        raise NewtonDatumError("Наклоны должны невозрастать", field="slopes", id=",".join(map(str, values)))

    multiplicity = 0
    for slope, count in _slope_blocks(values):
        if count % slope.denominator:
            raise NewtonDatumError(
                f"Наклон {slope} встречается {count} раз: точки излома многоугольника не целые",
                field="slopes",
                id=",".join(map(str, values)),
            )
        multiplicity += count // slope.denominator
    return n - multiplicity


def newton_from_slopes(system: RootSystem, slopes: Sequence[Fraction | int | str]) -> CoweightQ:
    """Точка Ньютона в присоединённом кохарактерном пространстве A_{n-1}: <alpha_i, nu> = r_i - r_{i+1}."""
    values = [Fraction(slope) for slope in slopes]
    if system.cartan_type.family != "A" or len(values) != system.rank + 1:
        raise NewtonDatumError(
            f"Наклоны задают точку Ньютона только для A_{len(values) - 1}, получен {system}",
            field="slopes",
            id=",".join(map(str, values)),
        )
    return CoweightQ.from_fundamental(system, [a - b for a, b in zip(values, values[1:])])


def newton_datum_from_slopes(system: RootSystem, slopes: Sequence[Fraction | int | str]) -> NewtonDatum:
    nu = newton_from_slopes(system, slopes)
    return NewtonDatum(nu, None, defect_type_A(system.rank + 1, slopes))
