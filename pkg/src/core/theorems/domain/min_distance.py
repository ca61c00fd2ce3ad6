from collections.abc import Sequence
from dataclasses import dataclass

from loguru import logger

from core.affine.domain.element import AffineElem
from core.affine.domain.level import LevelData, LevelType
from core.affine.domain.quotient import in_semi_affine_quotient, semi_affine_quotient
from core.qbg.domain.graph import QuantumBruhatGraph
from core.theorems.domain.exceptions import TheoremInputError
from core.weyl.domain.element import WeylElem
from generic.utils.parallel import partitioned_map


@dataclass(frozen=True, slots=True)
class MinDistanceReport:
    """Результат перебора min d(x, x w_0) по x in ^J W."""

    level: LevelType
    quotient_size: int
    min_value: int
    argmin: tuple[WeylElem, ...]
    rhs: int
    # Элементы, на которых нарушена нижняя оценка d(x, x w_0) >= rhs.
    violations: tuple[WeylElem, ...]

    @property
    def match(self) -> bool:
        return self.min_value == self.rhs and not self.violations


def theorem_min_rhs(qbg: QuantumBruhatGraph, level: LevelData) -> int:
    """l_R(w_0) + l(w_J) - l_R(w_J)."""
    weyl = qbg.weyl
    return weyl.reflection_length(weyl.w0) + level.excess


def _sort_key(w: WeylElem) -> tuple[int, tuple[int, ...]]:
    return w.length, w.word


def min_distance_scan(qbg: QuantumBruhatGraph, level: LevelData, threads: int = 1) -> MinDistanceReport:
    """Полный перебор ^J W с проверкой нижней оценки на каждом x.

    Расстояния ищутся с отсечением на rhs: этого достаточно и для проверки оценки, и для
    поиска минимума, если он совпадает с rhs. Иначе расстояния считаются точно.
    """
    weyl = qbg.weyl
    w0 = weyl.w0
    rhs = theorem_min_rhs(qbg, level)
    quotient = semi_affine_quotient(weyl, level.level)
    logger.debug("Перебор ^JW для {} J={}: |^JW| = {}, rhs = {}", qbg.system, level.level, len(quotient), rhs)

    def bounded(part: Sequence[WeylElem]) -> list[tuple[WeylElem, int | None]]:
        return [(x, qbg.bounded_distance(qbg.index(x), qbg.index(x * w0), rhs)) for x in part]

    values = {x: d for x, d in partitioned_map(bounded, quotient, threads) if d is not None}
    if not values:
        logger.debug("Минимум не достигается на rhs, точный перебор для J={}", level.level)

        def exact(part: Sequence[WeylElem]) -> list[tuple[WeylElem, int]]:
            return [(x, qbg.distance(x, x * w0)) for x in part]

        values = dict(partitioned_map(exact, quotient, threads))

    min_value = min(values.values())
    return MinDistanceReport(
        level=level.level,
        quotient_size=len(quotient),
        min_value=min_value,
        argmin=tuple(sorted((x for x, d in values.items() if d == min_value), key=_sort_key)),
        rhs=rhs,
        violations=tuple(sorted((x for x, d in values.items() if d < rhs), key=_sort_key)),
    )


@dataclass(frozen=True, slots=True)
class KeyLemmaCheck:
    lhs: int
    length_y: int
    tail: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.length_y + self.tail


def verify_key_lemma(qbg: QuantumBruhatGraph, level: LevelData, x: WeylElem, y: AffineElem) -> KeyLemmaCheck:
    """d(x, x w_0) = l(y) + d(x, bar(y) x w_0) для x in ^J W и y in W~_J."""
    if not in_semi_affine_quotient(x, level.level):
        raise TheoremInputError(f"Элемент {x} не лежит в ^JW для J={level.level}", field="x", id=str(x))
    if not level.contains(y):
        raise TheoremInputError(f"Элемент {y} не лежит в W~_J для J={level.level}", field="y", id=str(y))
    w0 = qbg.weyl.w0
    return KeyLemmaCheck(
        lhs=qbg.distance(x, x * w0),
        length_y=y.length,
        tail=qbg.distance(x, y.finite * x * w0),
    )
