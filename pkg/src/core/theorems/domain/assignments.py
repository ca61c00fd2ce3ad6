from collections.abc import Collection

from core.theorems.domain.exceptions import TheoremInputError, UnsupportedCartanTypeError
from core.weyl.domain.dynkin import components
from core.weyl.domain.group import Nodes, WeylGroup


def _half_up(size: int) -> int:
    return (size + 1) // 2


def _odd_nodes(count: int) -> set[int]:
    """{1, 3, ..., 2 count - 1} в нумерации с нуля."""
    return {2 * k for k in range(count)}


def _type_a(n: int, sizes: list[int]) -> Nodes:
    p = sum(_half_up(size) for size in sizes)
    return frozenset(range(p, n - p))


def _type_bc(n: int, parts: list[frozenset[int]]) -> Nodes:
    # Компонента, содержащая узел n, - множитель типа B_l/C_l (одиночный {n} считается C_1).
    special = next((part for part in parts if n - 1 in part), frozenset())
    p = sum(_half_up(len(part)) for part in parts if part != special)
    l = len(special)
    return frozenset(_odd_nodes(p) | set(range(2 * p + l, n)))


def _swap_fork(n: int, nodes: frozenset[int]) -> frozenset[int]:
    """Образ узлов (с нуля) при автоморфизме диаграммы D_n, меняющем n-1 и n."""
    swap = {n - 2: n - 1, n - 1: n - 2}
    return frozenset(swap.get(i, i) for i in nodes)


def _type_d(n: int, nodes: frozenset[int], parts: list[frozenset[int]]) -> Nodes:
    if n - 1 in nodes and n - 2 not in nodes:
        # Одиночный узел n вилки: автоморфизм n-1 <-> n сохраняет w_0, считаем для узла n-1.
        swapped = _swap_fork(n, nodes)
        return _swap_fork(n, _type_d(n, swapped, [_swap_fork(n, part) for part in parts]))

    fork = {n - 2, n - 1}
    if fork <= nodes:
        tail = frozenset().union(*(part for part in parts if part & fork))
        l = len(tail)
    else:
        tail, l = frozenset(), 0
    k = sum(_half_up(len(part)) for part in parts if not part & tail)

    if l == 0 and 2 * k == n:
        # w_J ~ w_{S \ {n}} типа A_{n-1}: w_0 = -1, класс I зависит от n mod 4.
        return frozenset(_odd_nodes(n // 2 - 1) | {n - 2 if n % 4 == 0 else n - 1})

    rest = n - 2 * k - l
    if rest == 0 or (rest == 1 and l % 2 == 0):
        m = 0
    elif rest >= 1 and l % 2 == 1:
        m = rest + 1
    else:
        m = rest
    return frozenset(_odd_nodes(k) | set(range(n - m, n)))


def classical_assignment(weyl: WeylGroup, nodes: Collection[int]) -> Nodes:
    """Подмножество I ⊆ S с w_0 w_I ~ w_J для классических типов.

    Узлы с нуля. J раскладывается на связные компоненты: в типе A каждая A_m даёт
    ceil(m/2) попарно ортогональных отражений, в типах B/C и D особая компонента
    (содержащая узел n, соответственно вилку {n-1, n}) учитывается отдельно.
    """
    system = weyl.system
    family, n = system.cartan_type.family, system.rank
    if family not in "ABCD":
        raise UnsupportedCartanTypeError(
            f"Классическое соответствие J -> I не определено для {system}", field="type", id=str(system)
        )
    subset = frozenset(nodes)
    if not subset <= set(range(n)):
        raise TheoremInputError(f"Узлы {sorted(subset)} вне S для {system}", field="level", id=str(sorted(subset)))

    parts = components(system, subset)
    match family:
        case "A":
            return _type_a(n, [len(part) for part in parts])
        case "B" | "C":
            return _type_bc(n, parts)
        case _:
            return _type_d(n, subset, parts)
