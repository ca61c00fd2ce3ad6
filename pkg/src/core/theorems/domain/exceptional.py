from collections.abc import Collection
from dataclasses import dataclass
from itertools import combinations

from loguru import logger

from core.theorems.domain.exceptions import TableRowNotFoundError, UnsupportedCartanTypeError
from core.weyl.domain.conjugacy import InvolutionConjugacy
from core.weyl.domain.dynkin import signature
from core.weyl.domain.element import WeylElem
from core.weyl.domain.group import Nodes, WeylGroup

type Labels = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class TableCell:
    """Ячейка таблицы: класс подмножеств J и l_R(w_J).

    Класс задаётся либо явными подмножествами (метки Бурбаки), либо сигнатурами
    подсистемы ("A1^3", "D4"); excluded убирает подмножества, сопряжённые исключённым.
    """

    reflection_length: int
    subsets: tuple[Labels, ...] = ()
    signatures: tuple[str, ...] = ()
    excluded: tuple[Labels, ...] = ()

    def describe(self) -> str:
        parts = [*self.signatures, *("{" + ",".join(map(str, labels)) + "}" for labels in self.subsets)]
        text = " or ".join(parts) or "∅"
        if self.excluded:
            text += " except " + ", ".join("{" + ",".join(map(str, labels)) + "}" for labels in self.excluded)
        return text


@dataclass(frozen=True, slots=True)
class TableRow:
    left: TableCell
    right: TableCell

    def describe(self) -> str:
        return (
            f"({self.left.describe()}, {self.left.reflection_length}) <-> "
            f"({self.right.describe()}, {self.right.reflection_length})"
        )


@dataclass(frozen=True, slots=True)
class TableMatch:
    """Найденная строка: сторона, к которой относится J, и кандидаты I с другой стороны."""

    row: TableRow
    reversed: bool
    candidates: tuple[Nodes, ...] = ()

    @property
    def j_cell(self) -> TableCell:
        return self.row.right if self.reversed else self.row.left

    @property
    def i_cell(self) -> TableCell:
        return self.row.left if self.reversed else self.row.right


@dataclass(frozen=True, slots=True)
class RowCertificate:
    row: TableRow
    j_nodes: Nodes | None
    i_nodes: Nodes | None
    conjugate: bool
    additive: bool

    @property
    def certified(self) -> bool:
        return self.conjugate and self.additive


def _cell(
    reflection_length: int, *subsets: Labels, signatures: tuple[str, ...] = (), excluded: tuple[Labels, ...] = ()
) -> TableCell:
    return TableCell(reflection_length, tuple(subsets), signatures, tuple(excluded))


def _but(rank: int, *labels: int) -> Labels:
    return tuple(k for k in range(1, rank + 1) if k not in labels)


EXCEPTIONAL_TABLES: dict[str, tuple[TableRow, ...]] = {
    "E6": (
        TableRow(_cell(0, ()), _cell(4, _but(6))),
        TableRow(_cell(1, signatures=("A1",)), _cell(3, _but(6, 2))),
        TableRow(_cell(2, signatures=("A1^2",)), _cell(2, (3, 4, 5))),
        TableRow(_cell(3, signatures=("A1^3",)), _cell(1, (4,))),
        TableRow(_cell(4, signatures=("D4", "D5")), _cell(0, ())),
    ),
    "E7": (
        TableRow(_cell(0, ()), _cell(7, _but(7))),
        TableRow(_cell(1, signatures=("A1",)), _cell(6, _but(7, 1))),
        TableRow(_cell(2, signatures=("A1^2",)), _cell(5, _but(7, 1, 6))),
        TableRow(_cell(3, signatures=("A1^3",), excluded=((2, 5, 7),)), _cell(4, (1, 2, 5, 7))),
        TableRow(_cell(3, (2, 5, 7)), _cell(4, (2, 3, 4, 5))),
    ),
    "E8": (
        TableRow(_cell(0, ()), _cell(8, _but(8))),
        TableRow(_cell(1, signatures=("A1",)), _cell(7, _but(8, 8))),
        TableRow(_cell(2, signatures=("A1^2",)), _cell(6, _but(8, 1, 8))),
        TableRow(_cell(3, signatures=("A1^3",)), _cell(4, (1, 2, 5, 8))),
        TableRow(_cell(4, signatures=("A1^4",)), _cell(4, (1, 4, 6, 8))),
        TableRow(_cell(4, signatures=("D4",)), _cell(4, signatures=("D4",))),
    ),
    "F4": (
        TableRow(_cell(0, ()), _cell(4, _but(4))),
        TableRow(_cell(1, (1,), (2,)), _cell(3, _but(4, 1))),
        TableRow(_cell(1, (3,), (4,)), _cell(3, _but(4, 4))),
        TableRow(_cell(2, signatures=("A1^2",)), _cell(2, signatures=("A1^2",))),
        TableRow(_cell(2, (2, 3)), _cell(2, (2, 3))),
    ),
    "G2": (
        TableRow(_cell(0, ()), _cell(2, (1, 2))),
        # -s_alpha = s_beta с beta ⊥ alpha, а в G2 такие корни разной длины.
        TableRow(_cell(1, (1,)), _cell(1, (2,))),
        TableRow(_cell(1, (2,)), _cell(1, (1,))),
    ),
}


class ExceptionalTables:
    """Таблицы пар (J, I) с w_0 w_I ~ w_J для исключительных типов.

    Таблицы симметричны по (J, I), поэтому поиск идёт по обеим сторонам строки.
    Классы с компонентами A_k, k >= 2, сопоставляются через сопряжённость инволюций
    (w_{A_k} ~ произведение ceil(k/2) ортогональных отражений).
    """

    def __init__(self, weyl: WeylGroup, conjugacy: InvolutionConjugacy) -> None:
        name = str(weyl.system.cartan_type)
        if name not in EXCEPTIONAL_TABLES:
            raise UnsupportedCartanTypeError(f"Для {name} нет таблицы разложений", field="type", id=name)
        self.weyl = weyl
        self.conjugacy = conjugacy
        self.rows = EXCEPTIONAL_TABLES[name]

    def expand(self, cell: TableCell) -> tuple[Nodes, ...]:
        """Подмножества (с нуля), описываемые ячейкой, в лексикографическом порядке."""
        system = self.weyl.system
        found = [frozenset(label - 1 for label in labels) for labels in cell.subsets]
        if cell.signatures:
            for size in range(system.rank + 1):
                for subset in combinations(range(system.rank), size):
                    if signature(system, subset) in cell.signatures:
                        found.append(frozenset(subset))
        excluded = [self.weyl.longest_element(label - 1 for label in labels) for labels in cell.excluded]
        return tuple(
            subset
            for subset in sorted(set(found), key=lambda s: (len(s), sorted(s)))
            if not any(self._conjugate(self.weyl.longest_element(subset), other) for other in excluded)
        )

    def _conjugate(self, a: WeylElem, b: WeylElem) -> bool:
        return bool(self.conjugacy.involutions_conjugate(a, b))

    def _matches(self, cell: TableCell, nodes: Nodes, reflection_length: int) -> bool:
        if cell.reflection_length != reflection_length:
            return False
        longest = self.weyl.longest_element(nodes)
        return any(self._conjugate(longest, self.weyl.longest_element(subset)) for subset in self.expand(cell))

    def lookup(self, nodes: Collection[int]) -> TableMatch:
        """Строка таблицы для J ⊆ S (с нуля)."""
        subset = frozenset(nodes)
        reflection_length = self.weyl.reflection_length(self.weyl.longest_element(subset))
        for row in self.rows:
            for reverse in (False, True):
                j_cell = row.right if reverse else row.left
                if self._matches(j_cell, subset, reflection_length):
                    i_cell = row.left if reverse else row.right
                    logger.debug("J={} сопоставлено строке {}", sorted(subset), row.describe())
                    return TableMatch(row, reverse, self.expand(i_cell))
        raise TableRowNotFoundError(id=f"{self.weyl.system}:{signature(self.weyl.system, subset)}")

    def certify(self, row: TableRow) -> RowCertificate:
        """Проверка строки: w_0 w_I ~ w_J и l_R(w_0) = l_R(w_J) + l_R(w_I) на представителях."""
        weyl = self.weyl
        w0_length = weyl.reflection_length(weyl.w0)
        j_options, i_options = self.expand(row.left), self.expand(row.right)
        fallback = None
        for j_nodes in j_options:
            w_j = weyl.longest_element(j_nodes)
            for i_nodes in i_options:
                w_i = weyl.longest_element(i_nodes)
                image = weyl.w0 * w_i
                additive = weyl.reflection_length(w_j) + weyl.reflection_length(w_i) == w0_length
                conjugate = image.is_involution and self._conjugate(image, w_j)
                if conjugate and additive:
                    return RowCertificate(row, j_nodes, i_nodes, True, True)
                fallback = fallback or RowCertificate(row, j_nodes, i_nodes, conjugate, additive)
        logger.warning("Строка {} для {} не подтверждена", row.describe(), weyl.system)
        return fallback or RowCertificate(row, None, None, False, False)
