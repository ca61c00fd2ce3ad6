from collections.abc import Collection
from dataclasses import dataclass
from typing import Literal

from loguru import logger

from core.affine.domain.level import LevelType
from core.affine.domain.quotient import semi_affine_quotient
from core.theorems.domain.exceptions import UnsupportedCartanTypeError
from core.weyl.domain.dynkin import components
from core.weyl.domain.element import WeylElem
from core.weyl.domain.group import WeylGroup
from generic.domain.exceptions import VerificationError

type FactorMethod = Literal["formula", "search"]


@dataclass(frozen=True, slots=True)
class InductionStep:
    """Шаг индукции J -> J' = J \\ {j}: x_{J'} = i x_J."""

    node: int
    factor: WeylElem
    method: FactorMethod


@dataclass(frozen=True, slots=True)
class Construction:
    x: WeylElem
    steps: tuple[InductionStep, ...]

    @property
    def method(self) -> FactorMethod:
        return "search" if any(step.method == "search" for step in self.steps) else "formula"


def interval_word(a: int, b: int) -> list[int]:
    """s_[a,b] = s_a s_{a+1} ... s_b (локальные метки с единицы); пусто при a > b."""
    return list(range(a, b + 1))


def type_a_factor(m: int, j: int) -> list[int]:
    """Слово множителя i для компоненты типа A_m и удаляемого узла j (локальные метки)."""
    if j > (m + 1) // 2:
        return [m + 1 - k for k in type_a_factor(m, m + 1 - j)]
    letters = []
    for k in range(j // 2):
        letters += interval_word(j - k, m - k)
    if j % 2:
        letters += interval_word((j + 1) // 2, m // 2)
    return letters


def type_bc_factor(m: int, j: int) -> list[int]:
    """Слово множителя i для компоненты типа B_m/C_m, содержащей особый узел m."""
    if j == 1:
        return interval_word(1, m - 1)
    half = (j + 1) // 2
    gamma = 2 if j % 2 == 0 else 1
    letters = []
    # kappa < floor(j/2), eta < ceil(j/2)
    for kappa in range(j // 2):
        letters += interval_word(j - kappa, m)
    for eta in range(half):
        letters += interval_word(half - eta, m - gamma - 2 * eta)
    return letters


class ClassicalConstruction:
    """Индуктивная конструкция x in ^J W с x <= x w_0 для типов A, B, C."""

    def __init__(self, weyl: WeylGroup) -> None:
        family = weyl.system.cartan_type.family
        if family not in "ABC":
            raise UnsupportedCartanTypeError(
                f"Явная конструкция определена только для типов A, B, C, получен {weyl.system}",
                field="type",
                id=str(weyl.system),
            )
        self.weyl = weyl
        self.family = family

    def excess(self, nodes: Collection[int]) -> int:
        """l(w_J) - l_R(w_J)."""
        longest = self.weyl.longest_element(nodes)
        return longest.length - self.weyl.reflection_length(longest)

    def target_length(self, nodes: Collection[int]) -> int:
        """1/2 {(l(w_0) - l_R(w_0)) - (l(w_J) - l_R(w_J))}."""
        return (self.excess(range(self.weyl.rank)) - self.excess(nodes)) // 2

    def construct(self, nodes: Collection[int]) -> Construction:
        weyl = self.weyl
        current = frozenset(range(weyl.rank))
        x = weyl.identity
        steps = []
        for j in sorted(current - frozenset(nodes)):
            factor, method = self._factor(current, j)
            x = factor * x
            current = current - {j}
            steps.append(InductionStep(j, factor, method))

        if not weyl.is_min_left_coset_rep(x, current):
            raise VerificationError(f"Построенный x = {x} не лежит в ^JW", entity="Construction", id=str(x))
        if not weyl.bruhat_le(x, x * weyl.w0):
            raise VerificationError(f"Для x = {x} не выполнено x <= x w_0", entity="Construction", id=str(x))
        if x.length != self.target_length(current):
            raise VerificationError(
                f"l(x) = {x.length}, ожидалось {self.target_length(current)}", entity="Construction", id=str(x)
            )
        return Construction(x, tuple(steps))

    def _factor(self, nodes: frozenset[int], j: int) -> tuple[WeylElem, FactorMethod]:
        component = next(c for c in components(self.weyl.system, nodes) if j in c)
        ordered = sorted(component)
        m = len(ordered)
        local_j = ordered.index(j) + 1
        if self.family in "BC" and self.weyl.rank - 1 in component:
            local = type_bc_factor(m, local_j)
        else:
            local = type_a_factor(m, local_j)
        factor = self.weyl.from_word(ordered[k - 1] for k in local)
        if self._is_valid_factor(factor, nodes, j):
            return factor, "formula"

        logger.warning("Множитель по формуле для J={}, j={} не подходит, перебор", sorted(nodes), j + 1)
        candidates = sorted(
            (i for i in self.weyl.parabolic_elements(ordered) if self._is_valid_factor(i, nodes, j)),
            key=lambda i: i.word,
        )
        if not candidates:
            raise VerificationError(
                f"Не найден множитель для J={sorted(nodes)}, j={j + 1}", entity="Construction", id=str(j + 1)
            )
        return candidates[0], "search"

    def _is_valid_factor(self, factor: WeylElem, nodes: frozenset[int], j: int) -> bool:
        """i in ^{J'} W_J, i < i w_J и l(i) = 1/2 {(l(w_J) - l_R(w_J)) - (l(w_J') - l_R(w_J'))}."""
        reduced = nodes - {j}
        if any(factor.has_left_descent(k) for k in reduced):
            return False
        if set(factor.word) - nodes:
            return False
        longest = self.weyl.longest_element(nodes)
        if not self.weyl.bruhat_le(factor, factor * longest) or factor == factor * longest:
            return False
        return 2 * factor.length == self.excess(nodes) - self.excess(reduced)


def witnesses(weyl: WeylGroup, level: LevelType) -> tuple[WeylElem, ...]:
    """{x in ^J W : x <= x w_0}; для J с аффинным узлом множество может быть пустым."""
    w0 = weyl.w0
    return tuple(x for x in semi_affine_quotient(weyl, level) if weyl.bruhat_le(x, x * w0))


def witness_min_distance(weyl: WeylGroup, level: LevelType) -> int | None:
    """l(w_0) - 2 max{l(x) : x in ^J W, x <= x w_0} или None, если свидетелей нет."""
    found = witnesses(weyl, level)
    if not found:
        return None
    return weyl.w0.length - 2 * max(x.length for x in found)
