from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Self

import sympy

from core.affine.domain.element import AffineElem
from core.affine.domain.exceptions import LevelTypeError, NonSphericalLevelError
from core.affine.domain.group import AffineGroup
from core.rootsys.domain.root_system import RootSystem
from core.weyl.domain.element import WeylElem


@dataclass(frozen=True, slots=True)
class LevelType:
    """Уровень J - подмножество аффинных простых узлов {0, 1, ..., n}."""

    nodes: frozenset[int]

    @classmethod
    def parse(cls, text: str | Iterable[int], rank: int) -> Self:
        """Разбирает "0,2,3"; пустая строка или "-" - уровень Ивахори."""
        if isinstance(text, str):
            raw = text.strip()
            if raw in {"", "-"}:
                return cls(frozenset())
            try:
                labels = frozenset(int(part) for part in raw.split(",") if part.strip())
            except ValueError as exc:
                raise LevelTypeError(f"Не удалось разобрать уровень {text!r}", field="level", id=text) from exc
        else:
            labels = frozenset(text)
        if not labels <= set(range(rank + 1)):
            raise LevelTypeError(f"Узлы уровня {sorted(labels)} вне диапазона 0..{rank}", field="level", id=str(text))
        return cls(labels)

    @property
    def is_finite_part(self) -> bool:
        """J ⊆ S (аффинный узел не входит)."""
        return 0 not in self.nodes

    @property
    def finite_nodes(self) -> frozenset[int]:
        """Конечные узлы J в нумерации с нуля."""
        return frozenset(j - 1 for j in self.nodes if j)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.nodes))) + "}"


def affine_gram(system: RootSystem) -> list[list[int]]:
    """Матрица Грама аффинных простых корней: alpha_0 = delta - theta."""
    n = system.rank
    theta = system.positive_roots[system.theta]
    theta_pairings = [sum(theta[k] * system.gram[k][j] for k in range(n)) for j in range(n)]
    gram = [[0] * (n + 1) for _ in range(n + 1)]
    gram[0][0] = system.norm(theta)
    for j in range(n):
        gram[0][j + 1] = gram[j + 1][0] = -theta_pairings[j]
        for k in range(n):
            gram[j + 1][k + 1] = system.gram[j][k]
    return gram


def is_spherical(system: RootSystem, level: LevelType) -> bool:
    """W~_J конечна: ограничение аффинной матрицы Грама на J положительно определено."""
    if not level.nodes:
        return True
    gram = affine_gram(system)
    labels = sorted(level.nodes)
    return bool(sympy.Matrix([[gram[a][b] for b in labels] for a in labels]).is_positive_definite)


class LevelData:
    """Данные уровня J: W~_J, длиннейший элемент w_J, его конечная часть и отражательная длина."""

    def __init__(self, affine: AffineGroup, level: LevelType) -> None:
        if not is_spherical(affine.system, level):
            raise NonSphericalLevelError(
                f"Уровень {level} не сферический для {affine.system}", field="level", id=str(level)
            )
        self.affine = affine
        self.level = level

    @cached_property
    def elements(self) -> tuple[AffineElem, ...]:
        """Элементы W~_J (обход в ширину)."""
        start = self.affine.identity
        seen = {start}
        ordered = [start]
        queue = deque(ordered)
        while queue:
            element = queue.popleft()
            for j in sorted(self.level.nodes):
                successor = element * self.affine.simple(j)
                if successor not in seen:
                    seen.add(successor)
                    ordered.append(successor)
                    queue.append(successor)
        return tuple(ordered)

    @cached_property
    def longest(self) -> AffineElem:
        """w_J."""
        element = self.affine.identity
        labels = sorted(self.level.nodes)
        while (j := next((j for j in labels if not self.affine.has_right_descent(element, j)), None)) is not None:
            element = element * self.affine.simple(j)
        return element

    @property
    def longest_finite(self) -> WeylElem:
        """Конечная часть w_J (образ при проекции W~ -> W)."""
        return self.longest.finite

    @cached_property
    def longest_length(self) -> int:
        return self.longest.length

    @cached_property
    def reflection_length(self) -> int:
        """l_R(w_J), вычисленная как l_R конечной части."""
        return self.affine.weyl.reflection_length(self.longest_finite)

    @property
    def excess(self) -> int:
        """l(w_J) - l_R(w_J)."""
        return self.longest_length - self.reflection_length

    def contains(self, y: AffineElem) -> bool:
        return y in set(self.elements)


def spherical_levels(system: RootSystem, with_affine: bool = True) -> list[LevelType]:
    """Все сферические J ⊆ S~ (или J ⊆ S) по возрастанию размера, затем лексикографически."""
    labels = range(0 if with_affine else 1, system.rank + 1)
    levels = (
        LevelType(frozenset(subset)) for size in range(len(labels) + 1) for subset in combinations(labels, size)
    )
    return [level for level in levels if is_spherical(system, level)]
