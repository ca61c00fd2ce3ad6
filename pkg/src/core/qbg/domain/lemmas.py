import math
import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from funcy import distinct
from loguru import logger

from core.qbg.domain.graph import QuantumBruhatGraph
from core.rootsys.domain.cartan import CartanType
from core.rootsys.domain.root_system import CoweightQ, pairing
from core.rootsys.domain.types import IntVector
from core.weyl.domain.element import format_nodes

type IndexPair = tuple[int, int]

# Сколько контрпримеров сохранять в строке отчёта.
MAX_FAILURES = 5


@dataclass(slots=True)
class LemmaCheck:
    """Итог проверки одного утверждения о графе на наборе пар вершин."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0

    def record(self, holds: bool, describe: str) -> None:
        self.checked += 1
        if holds:
            return
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(describe)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0


def vertex_pairs(qbg: QuantumBruhatGraph, sample: int, seed: int = 0) -> tuple[list[IndexPair], bool]:
    """Все пары вершин, если их не больше sample, иначе случайная выборка.

    Выборка группируется по источникам (~sqrt(sample) источников), чтобы обходы из одной
    вершины переиспользовались. Возвращает пары, упорядоченные по источнику, и признак
    полного перебора.
    """
    order = len(qbg.weyl.elements)
    if order * order <= sample:
        return list(product(range(order), repeat=2)), True
    rng = random.Random(seed)
    sources = sorted(rng.sample(range(order), min(order, max(1, math.isqrt(sample)))))
    per_source = min(order, max(1, sample // len(sources)))
    return [(source, target) for source in sources for target in sorted(rng.sample(range(order), per_source))], False


def _label(qbg: QuantumBruhatGraph, pair: IndexPair) -> str:
    x, y = pair
    return f"({qbg.element(x)}, {qbg.element(y)})"


def _two_rho(weight: Iterable[int]) -> int:
    """<2rho, lambda> для lambda в базисе простых кокорней."""
    return 2 * sum(weight)


def check_weight_bound(qbg: QuantumBruhatGraph, pairs: Iterable[IndexPair]) -> LemmaCheck:
    """<wt(x, y), alpha> <= 2 для каждого простого корня alpha."""
    check = LemmaCheck("wt-bound")
    system = qbg.system
    simple_roots = [system.simple_root(i + 1) for i in range(system.rank)]
    for pair in pairs:
        weight = CoweightQ(system, tuple(Fraction(c) for c in qbg.sweep_weight(*pair)))
        check.record(all(pairing(alpha, weight) <= 2 for alpha in simple_roots), _label(qbg, pair))
    return check


def check_length_identity(qbg: QuantumBruhatGraph, pairs: Iterable[IndexPair]) -> LemmaCheck:
    """l(y) - l(x) = d(x, y) - <2rho, wt(x, y)>."""
    check = LemmaCheck("wt-d")
    for source, target in pairs:
        x, y = qbg.element(source), qbg.element(target)
        distance = qbg.sweep_distance(source, target)
        weight = qbg.sweep_weight(source, target)
        check.record(y.length - x.length == distance - _two_rho(weight), _label(qbg, (source, target)))
    return check


def check_path_independence(qbg: QuantumBruhatGraph, pairs: Iterable[IndexPair]) -> LemmaCheck:
    """Все кратчайшие пути из x в y имеют один вес."""
    check = LemmaCheck("wt-x-y")
    for pair in pairs:
        x, y = qbg.element(pair[0]), qbg.element(pair[1])
        weights = {qbg.path_weight(path) for path in qbg.all_shortest_paths(x, y)}
        check.record(len(weights) == 1, _label(qbg, pair))
    return check


def _dominates(upper: IntVector, lower: IntVector) -> bool:
    return all(u >= l for u, l in zip(upper, lower, strict=True))


def check_longer_paths(
    qbg: QuantumBruhatGraph, pairs: Iterable[IndexPair], extra: int = 2, per_pair: int = 20
) -> LemmaCheck:
    """Вес любого пути из x в y не меньше wt(x, y) в порядке доминирования."""
    check = LemmaCheck("wt-longer")
    for pair in pairs:
        x, y = qbg.element(pair[0]), qbg.element(pair[1])
        shortest = qbg.weight(x, y)
        for path in qbg.longer_paths(x, y, extra, per_pair):
            check.record(_dominates(qbg.path_weight(path), shortest), _label(qbg, pair))
    return check


def check_length_subtraction(qbg: QuantumBruhatGraph, sources: Iterable[int]) -> LemmaCheck:
    """d(x, x w_I) = l_R(w_I) для I ⊆ S, если l(x w_I) = l(x) - l(w_I).

    Для произвольного y равенство d(x, x y) = l_R(y) неверно (B2: x = y = s1 s2 s1).
    """
    check = LemmaCheck("d-subtract")
    weyl = qbg.weyl
    parabolics = [
        (nodes, weyl.longest_element(nodes))
        for size in range(1, weyl.rank + 1)
        for nodes in combinations(range(weyl.rank), size)
    ]
    for source in sources:
        x = qbg.element(source)
        for nodes, w_nodes in parabolics:
            xy = x * w_nodes
            if xy.length != x.length - w_nodes.length:
                continue
            distance = qbg.sweep_distance(source, qbg.index(xy))
            check.record(
                distance == weyl.reflection_length(w_nodes),
                f"x={x}, I={format_nodes(nodes)}, d={distance}",
            )
    return check


def check_product_length(qbg: QuantumBruhatGraph, pairs: Iterable[IndexPair]) -> LemmaCheck:
    """l(x y) = l(x) - l(y) + 2 |Inv(x)^c ∩ Inv(y^{-1})|."""
    check = LemmaCheck("product-length")
    weyl = qbg.weyl
    for pair in pairs:
        x, y = qbg.element(pair[0]), qbg.element(pair[1])
        expected = x.length - y.length + 2 * weyl.product_length_defect(x, y)
        check.record((x * y).length == expected, _label(qbg, pair))
    return check


def check_longest_element(qbg: QuantumBruhatGraph) -> LemmaCheck:
    """d(w_0, 1) = l_R(w_0) и <2rho, wt(w_0, 1)> = l(w_0) + l_R(w_0)."""
    check = LemmaCheck("w0")
    weyl = qbg.weyl
    reflection_length = weyl.reflection_length(weyl.w0)
    expected_length = expected_w0_reflection_length(weyl.system.cartan_type)
    check.record(reflection_length == expected_length, f"l_R(w0) = {reflection_length}, ожидалось {expected_length}")
    check.record(qbg.d_w0_1 == reflection_length, f"d(w0,1) = {qbg.d_w0_1}, l_R(w0) = {reflection_length}")
    check.record(
        _two_rho(qbg.wt_w0_1) == weyl.w0.length + reflection_length,
        f"<2rho, wt(w0,1)> = {_two_rho(qbg.wt_w0_1)}",
    )
    check.record(qbg.distance(weyl.identity, weyl.w0) == weyl.w0.length, "d(1, w0) != l(w0)")
    check.record(not any(qbg.weight(weyl.identity, weyl.w0)), "wt(1, w0) != 0")
    expected = expected_w0_weight(weyl.system.cartan_type)
    if expected is not None:
        fundamental = qbg.weight_coweight(weyl.w0, weyl.identity).fundamental
        check.record(tuple(fundamental) == expected, f"wt(w0,1) = {list(fundamental)}")
    return check


def expected_w0_weight(cartan_type: CartanType) -> IntVector | None:
    """wt(w_0, 1) = varpi_m^vee + varpi_{m+1}^vee для A_{2m} (в фундаментальных координатах)."""
    if cartan_type.family != "A" or cartan_type.rank % 2:
        return None
    m = cartan_type.rank // 2
    return tuple(int(k in (m - 1, m)) for k in range(cartan_type.rank))


def expected_w0_reflection_length(cartan_type: CartanType) -> int:
    """l_R(w_0) = n - dim Fix(w_0)."""
    n = cartan_type.rank
    match cartan_type.family:
        case "A":
            return (n + 1) // 2
        case "D":
            return n if n % 2 == 0 else n - 1
        case "E":
            return {6: 4, 7: 7, 8: 8}[n]
        case _:
            return n


def run_all(qbg: QuantumBruhatGraph, pairs: list[IndexPair]) -> Iterator[LemmaCheck]:
    """Все проверки на одном наборе пар; d-subtract идёт по источникам пар."""
    logger.info("Проверка утверждений о графе {} на {} парах", qbg.system, len(pairs))
    yield check_longest_element(qbg)
    yield check_weight_bound(qbg, pairs)
    yield check_length_identity(qbg, pairs)
    yield check_path_independence(qbg, pairs)
    yield check_longer_paths(qbg, pairs)
    yield check_length_subtraction(qbg, distinct(source for source, _ in pairs))
    yield check_product_length(qbg, pairs)
