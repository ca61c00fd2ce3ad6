from collections import deque
from collections.abc import Collection, Iterable
from functools import cached_property

import sympy
from loguru import logger

from core.rootsys.domain.cartan import group_order
from core.rootsys.domain.root_system import RootSystem
from core.rootsys.domain.types import NodeLabel
from core.weyl.domain.element import WeylElem
from core.weyl.domain.exceptions import ParabolicSubsetError, WeylElemError
from generic.domain.exceptions import BudgetExceededError

type Nodes = frozenset[int]


class WeylGroup:
    """Конечная группа Вейля системы корней.

    Подмножества простых узлов передаются с нумерацией с нуля;
    для разбора внешней нумерации Бурбаки служат parse_nodes и parse.
    """

    def __init__(self, system: RootSystem, max_group_size: int = 51_840) -> None:
        self.system = system
        self.max_group_size = max_group_size
        self._reflection_length_cache: dict[tuple[tuple[int, ...], Nodes | None], int] = {}
        self._longest_cache: dict[Nodes, WeylElem] = {}

    @property
    def rank(self) -> int:
        return self.system.rank

    @property
    def order(self) -> int:
        return group_order(self.system.cartan_type)

    @cached_property
    def identity(self) -> WeylElem:
        return WeylElem(tuple(range(self.system.n_positive)), self.system)

    def simple(self, i: int) -> WeylElem:
        return WeylElem(self.system.simple_perms[i], self.system)

    def from_word(self, letters: Iterable[int]) -> WeylElem:
        """Произведение s_{i_1} ... s_{i_k}; индексы с нуля."""
        element = self.identity
        for i in letters:
            element = element.right_mul_simple(i)
        return element

    def parse(self, text: str) -> WeylElem:
        """Разбирает слово вида "1.2.1" (нумерация Бурбаки); "e" - единица, "w0" - самый длинный элемент."""
        raw = text.strip()
        if raw in {"", "e", "1e"}:
            return self.identity
        if raw == "w0":
            return self.w0
        try:
            labels = [int(part) for part in raw.replace(",", ".").split(".") if part]
        except ValueError as exc:
            raise WeylElemError(f"Не удалось разобрать слово {text!r}", field="word", id=text) from exc
        return self.from_word(self._node(label) for label in labels)

    def parse_nodes(self, text: str | Iterable[NodeLabel]) -> Nodes:
        """Подмножество простых узлов в нумерации Бурбаки: "1,3" или итерируемое меток."""
        if isinstance(text, str):
            raw = text.strip()
            if raw in {"", "-"}:
                return frozenset()
            try:
                labels = [int(part) for part in raw.split(",") if part.strip()]
            except ValueError as exc:
                raise ParabolicSubsetError(f"Не удалось разобрать подмножество {text!r}", field="J", id=text) from exc
        else:
            labels = list(text)
        return frozenset(self._node(label, entity_field="J") for label in labels)

    def _node(self, label: int, entity_field: str = "word") -> int:
        if not 1 <= label <= self.rank:
            raise ParabolicSubsetError(
                f"Узел {label} вне диапазона 1..{self.rank} для {self.system}", field=entity_field, id=label
            )
        return label - 1

    def reflection(self, r: int) -> WeylElem:
        """Отражение s_beta для положительного корня beta_r: gamma - <gamma, beta^vee> beta."""
        system = self.system
        beta = system.positive_roots[r]
        coroot = system.positive_coroots[r]
        n = system.rank
        perm = []
        for gamma in system.positive_roots:
            coefficient = sum(gamma[k] * system.cartan_matrix[k][j] * coroot[j] for k in range(n) for j in range(n))
            image = tuple(g - coefficient * b for g, b in zip(gamma, beta, strict=True))
            perm.append(system.signed_index(image))
        return WeylElem(tuple(perm), system)

    @cached_property
    def reflections(self) -> tuple[WeylElem, ...]:
        return tuple(self.reflection(r) for r in range(self.system.n_positive))

    def longest_element(self, nodes: Collection[int] = ()) -> WeylElem:
        """w_J: наращивание справа по восходящим s_j, j in J."""
        key = frozenset(nodes)
        if key not in self._longest_cache:
            element = self.identity
            nodes_sorted = sorted(key)
            while (ascent := next((j for j in nodes_sorted if not element.has_right_descent(j)), None)) is not None:
                element = element.right_mul_simple(ascent)
            self._longest_cache[key] = element
        return self._longest_cache[key]

    @cached_property
    def w0(self) -> WeylElem:
        return self.longest_element(range(self.rank))

    def bruhat_le(self, v: WeylElem, w: WeylElem) -> bool:
        """v <= w через рекурсию по левым спускам w."""
        while True:
            if v.length > w.length:
                return False
            if w.length == 0:
                return v.length == 0
            s = min(w.left_descents)
            if v.has_left_descent(s):
                v = v.left_mul_simple(s)
            w = w.left_mul_simple(s)

    def reflection_length(self, w: WeylElem, within: Collection[int] | None = None) -> int:
        """l_R(w) = rank(w - 1) в отражательном представлении.

        При within=J ранг считается на линейной оболочке простых корней J (w должен лежать в W_J).
        """
        key = (w.perm, frozenset(within) if within is not None else None)
        if key not in self._reflection_length_cache:
            columns = sorted(within) if within is not None else list(range(self.rank))
            matrix = sympy.Matrix(
                [[w.root_image_coords(j)[i] - int(i == j) for j in columns] for i in columns]
            )
            self._reflection_length_cache[key] = int(matrix.rank())
        return self._reflection_length_cache[key]

    @cached_property
    def _enumeration(self) -> tuple[tuple[WeylElem, ...], dict[WeylElem, int]]:
        if self.order > self.max_group_size:
            raise BudgetExceededError(setting="max_group_size", limit=self.max_group_size, measured=self.order)
        logger.debug("Перечисление группы Вейля {} (|W| = {})", self.system, self.order)
        index = {self.identity: 0}
        ordered = [self.identity]
        queue = deque([self.identity])
        while queue:
            element = queue.popleft()
            for i in range(self.rank):
                if element.has_right_descent(i):
                    continue
                successor = element.right_mul_simple(i)
                if successor not in index:
                    index[successor] = len(ordered)
                    ordered.append(successor)
                    queue.append(successor)
        return tuple(ordered), index

    @property
    def elements(self) -> tuple[WeylElem, ...]:
        """Все элементы W в порядке неубывания длины (BFS от единицы)."""
        return self._enumeration[0]

    def index_of(self, w: WeylElem) -> int:
        return self._enumeration[1][w]

    def parabolic_elements(self, nodes: Collection[int]) -> tuple[WeylElem, ...]:
        """Элементы W_J без перечисления всей группы."""
        seen = {self.identity}
        ordered = [self.identity]
        queue = deque(ordered)
        while queue:
            element = queue.popleft()
            for j in nodes:
                successor = element.right_mul_simple(j)
                if successor not in seen:
                    seen.add(successor)
                    ordered.append(successor)
                    queue.append(successor)
        return tuple(ordered)

    def is_min_left_coset_rep(self, w: WeylElem, nodes: Collection[int]) -> bool:
        """w in ^J W: w^{-1}(alpha_j) > 0 для всех j in J."""
        return not any(w.has_left_descent(j) for j in nodes)

    def min_coset_reps(self, nodes: Collection[int]) -> tuple[WeylElem, ...]:
        return tuple(w for w in self.elements if self.is_min_left_coset_rep(w, nodes))

    def product_length_defect(self, x: WeylElem, y: WeylElem) -> int:
        """|Inv(x)^c ∩ Inv(y^{-1})|."""
        complement = frozenset(range(self.system.n_positive)) - x.inversions
        return len(complement & y.inverse.inversions)
