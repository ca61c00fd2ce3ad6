from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from loguru import logger

from core.affine.domain.level import LevelData, LevelType
from core.affine.domain.quotient import semi_affine_quotient
from core.qbg.domain.graph import QuantumBruhatGraph
from core.theorems.domain.assignments import classical_assignment
from core.theorems.domain.exceptional import EXCEPTIONAL_TABLES, ExceptionalTables
from core.theorems.domain.exceptions import DecompositionNotFoundError, TableRowNotFoundError
from core.weyl.domain.conjugacy import InvolutionConjugacy
from core.weyl.domain.element import WeylElem
from core.weyl.domain.group import Nodes, WeylGroup

type SubsetSource = Literal["assignment", "table", "search"]


@dataclass(frozen=True, slots=True)
class GoodDecomposition:
    """Хорошее разложение w_0 = (x^{-1} bar(w)_J x) w_I."""

    level: LevelType
    # J' ⊆ S с w_{J'} ~ bar(w)_J.
    reduced: Nodes
    x: WeylElem
    nodes: Nodes
    source: SubsetSource
    # Элемент максимальной длины в Xi_{J,I} переводит Delta_I в отрицательные корни.
    claim_b: bool


@dataclass(frozen=True, slots=True)
class AssignmentCertificate:
    nodes: Nodes
    subset: Nodes
    conjugate: bool
    additive: bool

    @property
    def certified(self) -> bool:
        return self.conjugate and self.additive


def _subsets_by_size(rank: int) -> Iterator[Nodes]:
    for size in range(rank + 1):
        for subset in combinations(range(rank), size):
            yield frozenset(subset)


def certify_assignment(weyl: WeylGroup, conjugacy: InvolutionConjugacy, nodes: Nodes) -> AssignmentCertificate:
    """w_0 w_I ~ w_J и l_R(w_0 w_I) = l_R(w_0) - l_R(w_I) для I из классического соответствия."""
    subset = classical_assignment(weyl, nodes)
    w_i = weyl.longest_element(subset)
    image = weyl.w0 * w_i
    conjugate = image.is_involution and bool(conjugacy.involutions_conjugate(image, weyl.longest_element(nodes)))
    additive = weyl.reflection_length(image) == weyl.reflection_length(weyl.w0) - weyl.reflection_length(w_i)
    return AssignmentCertificate(frozenset(nodes), subset, conjugate, additive)


class DecompositionSearch:
    """Поиск сертифицированного разложения w_0 для сферического уровня J.

    J сводится к J' ⊆ S с w_{J'} ~ bar(w)_J, кандидаты I берутся из классического
    соответствия или таблиц, затем из всех подмножеств S. Элементы x in ^J W
    перебираются по убыванию длины, затем по слову.
    """

    def __init__(self, qbg: QuantumBruhatGraph, conjugacy: InvolutionConjugacy) -> None:
        self.qbg = qbg
        self.weyl = qbg.weyl
        self.conjugacy = conjugacy

    def reduce_level(self, level: LevelData) -> Nodes:
        """Лексикографически первое J' ⊆ S с w_{J'} ~ bar(w)_J."""
        target = level.longest_finite
        if level.level.is_finite_part:
            return level.level.finite_nodes
        target_length = self.weyl.reflection_length(target)
        for subset in _subsets_by_size(self.weyl.rank):
            candidate = self.weyl.longest_element(subset)
            if self.weyl.reflection_length(candidate) != target_length:
                continue
            if self.conjugacy.involutions_conjugate(candidate, target):
                return subset
        raise DecompositionNotFoundError(
            f"Нет J' ⊆ S с w_J' ~ {target} для уровня {level.level}", id=str(level.level)
        )

    def _primary(self, reduced: Nodes) -> tuple[list[Nodes], SubsetSource]:
        system = self.weyl.system
        if system.cartan_type.family in "ABCD":
            return [classical_assignment(self.weyl, reduced)], "assignment"
        if str(system.cartan_type) in EXCEPTIONAL_TABLES:
            try:
                return list(ExceptionalTables(self.weyl, self.conjugacy).lookup(reduced).candidates), "table"
            except TableRowNotFoundError:
                logger.warning("Класс J'={} не найден в таблице {}", sorted(reduced), system)
        return [], "search"

    def _admissible_subset(self, subset: Nodes, wbar: WeylElem, reflection_length: int) -> bool:
        weyl = self.weyl
        w_i = weyl.longest_element(subset)
        if reflection_length + weyl.reflection_length(w_i) != weyl.reflection_length(weyl.w0):
            return False
        image = weyl.w0 * w_i
        return image.is_involution and bool(self.conjugacy.involutions_conjugate(image, wbar))

    def candidates(self, reduced: Nodes, wbar: WeylElem) -> Iterator[tuple[Nodes, SubsetSource]]:
        primary, source = self._primary(reduced)
        reflection_length = self.weyl.reflection_length(wbar)
        tried = set()
        for subset in primary:
            tried.add(subset)
            if self._admissible_subset(subset, wbar, reflection_length):
                yield subset, source
            else:
                logger.warning("Кандидат I={} ({}) не подходит для J'={}", sorted(subset), source, sorted(reduced))
        for subset in _subsets_by_size(self.weyl.rank):
            if subset not in tried and self._admissible_subset(subset, wbar, reflection_length):
                yield subset, "search"

    def search(self, level: LevelData) -> GoodDecomposition:
        weyl, qbg = self.weyl, self.qbg
        wbar = level.longest_finite
        reduced = self.reduce_level(level)
        quotient = sorted(semi_affine_quotient(weyl, level.level), key=lambda w: (-w.length, w.word))

        for subset, source in self.candidates(reduced, wbar):
            w_i = weyl.longest_element(subset)
            product = weyl.w0 * w_i
            xi = [x for x in quotient if x.inverse * wbar * x == product]
            if not xi:
                continue
            claim_b = all(xi[0].act(j) >= weyl.system.n_positive for j in subset)
            for x in xi:
                x_wi = x * w_i
                if x_wi.length != x.length - w_i.length:
                    continue
                if qbg.distance(x, x_wi) != weyl.reflection_length(w_i):
                    continue
                logger.debug("Разложение для J={}: x={}, I={}", level.level, x, sorted(subset))
                return GoodDecomposition(level.level, reduced, x, subset, source, claim_b)

        raise DecompositionNotFoundError(
            f"Не найдено хорошее разложение w_0 для уровня {level.level} в {weyl.system}",
            id=str(level.level),
            tech_details={"reduced": sorted(k + 1 for k in reduced)},
        )
