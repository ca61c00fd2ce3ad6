from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from core.rootsys.domain.root_system import CoweightQ, RootSystem, format_vector
from core.weyl.domain.element import WeylElem

type Translation = tuple[int, ...]


@dataclass(frozen=True)
class AffineElem:
    """Элемент t^lambda w расширенной аффинной группы Вейля.

    translation хранит lambda в координатах <alpha_i, lambda> (целые для P^vee и Q^vee).
    """

    translation: Translation
    finite: WeylElem

    @property
    def system(self) -> RootSystem:
        return self.finite.system

    def __mul__(self, other: "AffineElem") -> "AffineElem":
        """(t^lambda u)(t^mu v) = t^{lambda + u(mu)} uv."""
        moved = self.finite.act_fundamental(other.translation)
        return AffineElem(
            tuple(a + int(b) for a, b in zip(self.translation, moved, strict=True)),
            self.finite * other.finite,
        )

    @cached_property
    def inverse(self) -> "AffineElem":
        """t^{-w^{-1} lambda} w^{-1}."""
        finite_inverse = self.finite.inverse
        return AffineElem(tuple(-int(p) for p in finite_inverse.act_fundamental(self.translation)), finite_inverse)

    @cached_property
    def length(self) -> int:
        """Формула Ивахори - Мацумото."""
        system = self.system
        n_positive = system.n_positive
        inverse = self.finite.inverse
        total = 0
        for r, root in enumerate(system.positive_roots):
            value = system.pair_fundamental(root, self.translation)
            total += abs(value) if inverse.perm[r] < n_positive else abs(value - 1)
        return total

    @cached_property
    def coweight(self) -> CoweightQ:
        return CoweightQ.from_fundamental(self.system, self.translation)

    @cached_property
    def component(self) -> tuple[Fraction, ...]:
        """Класс lambda в P^vee/Q^vee: дробные части координат в базисе простых кокорней."""
        return tuple(c - (c.numerator // c.denominator) for c in self.coweight.coords)

    def __str__(self) -> str:
        return f"t{format_vector(self.coweight.coords)}·{self.finite}"
