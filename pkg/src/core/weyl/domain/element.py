from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from core.rootsys.domain.root_system import Root, RootSystem
from core.rootsys.domain.types import IntVector
from core.weyl.domain.exceptions import WeylElemError


@dataclass(frozen=True)
class WeylElem:
    """Элемент конечной группы Вейля как знаковая перестановка положительных корней.

    perm[r] - индекс w(beta_r); значение v >= N кодирует отрицательный корень -beta_{v - N}.
    """

    perm: tuple[int, ...]
    system: RootSystem = field(repr=False)

    @property
    def _n(self) -> int:
        return len(self.perm)

    @cached_property
    def _extended(self) -> tuple[int, ...]:
        n = self._n
        return self.perm + tuple((value + n) % (2 * n) for value in self.perm)

    def act(self, signed: int) -> int:
        """Образ корня в знаковой кодировке."""
        return self._extended[signed]

    def act_on(self, root: Root) -> Root:
        if root.system is not self.system:
            raise WeylElemError("Корень и элемент относятся к разным системам", field="root")
        return Root(self.system, self.system.signed_root(self.act(root.index)))

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        if other.system is not self.system:
            raise WeylElemError(f"Разные системы корней: {self.system} и {other.system}", field="type")
        return WeylElem(tuple(map(self._extended.__getitem__, other.perm)), self.system)

    def right_mul_simple(self, i: int) -> "WeylElem":
        """w s_i."""
        return WeylElem(tuple(map(self._extended.__getitem__, self.system.simple_perms[i])), self.system)

    def left_mul_simple(self, i: int) -> "WeylElem":
        """s_i w."""
        simple = self.system.simple_perms[i]
        n = self._n
        return WeylElem(tuple(simple[v] if v < n else (simple[v - n] + n) % (2 * n) for v in self.perm), self.system)

    @cached_property
    def inverse(self) -> "WeylElem":
        n = self._n
        inv = [0] * n
        for r, value in enumerate(self.perm):
            inv[value % n] = r if value < n else r + n
        return WeylElem(tuple(inv), self.system)

    @cached_property
    def length(self) -> int:
        n = self._n
        return sum(value >= n for value in self.perm)

    @cached_property
    def inversions(self) -> frozenset[int]:
        """Inv(w) = {alpha > 0 : w(alpha) < 0} как индексы положительных корней."""
        n = self._n
        return frozenset(r for r, value in enumerate(self.perm) if value >= n)

    def has_right_descent(self, i: int) -> bool:
        return self.perm[i] >= self._n

    def has_left_descent(self, i: int) -> bool:
        return self.inverse.perm[i] >= self._n

    @property
    def right_descents(self) -> frozenset[int]:
        return frozenset(i for i in range(self.system.rank) if self.has_right_descent(i))

    @property
    def left_descents(self) -> frozenset[int]:
        return frozenset(i for i in range(self.system.rank) if self.has_left_descent(i))

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    @property
    def is_involution(self) -> bool:
        return (self * self).is_identity

    @cached_property
    def word(self) -> tuple[int, ...]:
        """Лексикографически минимальное приведённое слово (индексы с нуля)."""
        letters = []
        current = self
        while current.length:
            i = min(current.left_descents)
            letters.append(i)
            current = current.left_mul_simple(i)
        return tuple(letters)

    def root_image_coords(self, j: int) -> IntVector:
        """Координаты w(alpha_j) в базисе простых корней."""
        return self.system.signed_root(self.act(j))

    def act_fundamental(self, fundamental: Sequence[int | Fraction]) -> tuple:
        """w(lambda) в координатах <alpha_k, lambda>: <w^{-1} alpha_k, lambda>."""
        inverse = self.inverse
        return tuple(
            self.system.pair_fundamental(self.system.signed_root(inverse.act(k)), fundamental)
            for k in range(self.system.rank)
        )

    def __str__(self) -> str:
        return format_word(self.word)


def format_word(letters: Iterable[int]) -> str:
    """Слово в нумерации Бурбаки через точку; пустое слово - "e"."""
    text = ".".join(str(i + 1) for i in letters)
    return text or "e"


def format_nodes(nodes: Iterable[int]) -> str:
    """Подмножество узлов (с нуля) в нумерации Бурбаки: "{1,3}"."""
    return "{" + ",".join(str(i + 1) for i in sorted(nodes)) + "}"
