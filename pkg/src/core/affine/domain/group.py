from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from core.affine.domain.element import AffineElem, Translation
from core.affine.domain.exceptions import AffineElemError, NonIntegralCoweightError
from core.rootsys.domain.root_system import CoweightQ
from core.rootsys.domain.types import Lattice
from core.weyl.domain.element import WeylElem
from core.weyl.domain.group import WeylGroup


@dataclass(frozen=True, slots=True)
class BruhatVerdict:
    """Результат сравнения в порядке Брюа; элементы разных компонент несравнимы."""

    le: bool
    same_component: bool

    def __bool__(self) -> bool:
        return self.le


class AffineGroup:
    """Расширенная аффинная группа Вейля X_*(T) x W.

    Аффинные простые отражения нумеруются 0..n (0 - аффинный узел, s_0 = t^{theta^vee} s_theta).
    """

    def __init__(self, weyl: WeylGroup, lattice: Lattice = "adjoint") -> None:
        self.weyl = weyl
        self.system = weyl.system
        self.lattice = lattice

    @property
    def rank(self) -> int:
        return self.system.rank

    @property
    def nodes(self) -> range:
        return range(self.rank + 1)

    @cached_property
    def identity(self) -> AffineElem:
        return AffineElem((0,) * self.rank, self.weyl.identity)

    @cached_property
    def theta_check(self) -> Translation:
        """theta^vee в координатах <alpha_k, theta^vee>."""
        coroot = self.system.positive_coroots[self.system.theta]
        return tuple(int(p) for p in self.system.to_fundamental(coroot))

    @cached_property
    def _simple(self) -> tuple[AffineElem, ...]:
        s_theta = self.weyl.reflection(self.system.theta)
        zero = (0,) * self.rank
        return (AffineElem(self.theta_check, s_theta),) + tuple(
            AffineElem(zero, self.weyl.simple(i)) for i in range(self.rank)
        )

    def simple(self, k: int) -> AffineElem:
        return self._simple[k]

    def finite(self, w: WeylElem) -> AffineElem:
        return AffineElem((0,) * self.rank, w)

    def translation(self, fundamental: Sequence[int]) -> AffineElem:
        return AffineElem(self.check_translation(fundamental), self.weyl.identity)

    def translation_of(self, coweight: CoweightQ) -> AffineElem:
        return self.translation(coweight.fundamental)

    def check_translation(self, fundamental: Sequence) -> Translation:
        """Проверяет, что lambda лежит в решётке (P^vee для adjoint, Q^vee для sc)."""
        coweight = CoweightQ.from_fundamental(self.system, fundamental)
        if not coweight.is_integral(self.lattice):
            raise NonIntegralCoweightError(
                f"Кохарактер {coweight} не лежит в решётке {self.lattice}", field="mu", id=str(coweight)
            )
        return tuple(int(p) for p in fundamental)

    def from_word(self, letters: Iterable[int], tau: AffineElem | None = None) -> AffineElem:
        element = self.identity
        for k in letters:
            element = element * self.simple(k)
        return element * tau if tau is not None else element

    def parse_word(self, text: str) -> AffineElem:
        """Слово из аффинных простых отражений: "0.1.2"; "e" - единица."""
        raw = text.strip()
        if raw in {"", "e"}:
            return self.identity
        try:
            letters = [int(part) for part in raw.split(".") if part]
        except ValueError as exc:
            raise AffineElemError(f"Не удалось разобрать слово {text!r}", field="word", id=text) from exc
        if any(k not in self.nodes for k in letters):
            raise AffineElemError(f"Узлы слова {text!r} вне диапазона 0..{self.rank}", field="word", id=text)
        return self.from_word(letters)

    def has_left_descent(self, x: AffineElem, k: int) -> bool:
        return (self.simple(k) * x).length < x.length

    def has_right_descent(self, x: AffineElem, k: int) -> bool:
        return (x * self.simple(k)).length < x.length

    def left_descents(self, x: AffineElem) -> list[int]:
        return [k for k in self.nodes if self.has_left_descent(x, k)]

    def word(self, x: AffineElem) -> tuple[tuple[int, ...], AffineElem]:
        """Лексикографически минимальное приведённое слово и множитель длины ноль: x = s_{i_1}...s_{i_k} tau."""
        letters = []
        current = x
        while current.length:
            k = next(k for k in self.nodes if self.has_left_descent(current, k))
            letters.append(k)
            current = self.simple(k) * current
        return tuple(letters), current

    def format_word(self, x: AffineElem) -> str:
        letters, tau = self.word(x)
        text = ".".join(map(str, letters)) or "e"
        return text if tau == self.identity else f"{text}·τ{tau.translation}"

    def bruhat_le(self, v: AffineElem, w: AffineElem) -> BruhatVerdict:
        """v <= w через рекурсию по левым спускам; разные компоненты Omega несравнимы."""
        if v.component != w.component:
            return BruhatVerdict(le=False, same_component=False)
        while True:
            if v.length > w.length:
                return BruhatVerdict(le=False, same_component=True)
            if w.length == 0:
                return BruhatVerdict(le=v == w, same_component=True)
            k = next(k for k in self.nodes if self.has_left_descent(w, k))
            if self.has_left_descent(v, k):
                v = self.simple(k) * v
            w = self.simple(k) * w

    def is_min_coset_rep(self, x: AffineElem, level: Iterable[int]) -> bool:
        """x in ^J W~: l(s_j x) > l(x) для всех j in J."""
        return not any(self.has_left_descent(x, j) for j in level)

    def conjugate(self, tau: AffineElem, x: AffineElem) -> AffineElem:
        return tau * x * tau.inverse
