from collections import Counter
from collections.abc import Collection

from core.rootsys.domain.root_system import RootSystem


def components(system: RootSystem, nodes: Collection[int]) -> list[frozenset[int]]:
    """Связные компоненты поддиаграммы на узлах nodes (индексы с нуля), по возрастанию минимума."""
    remaining = set(nodes)
    result = []
    while remaining:
        start = min(remaining)
        component = {start}
        stack = [start]
        while stack:
            node = stack.pop()
            for neighbour in system.neighbours[node] & remaining:
                if neighbour not in component:
                    component.add(neighbour)
                    stack.append(neighbour)
        remaining -= component
        result.append(frozenset(component))
    return sorted(result, key=min)


def component_type(system: RootSystem, component: frozenset[int]) -> str:
    """Тип Картана связной поддиаграммы, например "A3", "D4", "C2"."""
    size = len(component)
    if size == 1:
        return "A1"
    bonds = [system.cartan_matrix[i][j] for i in component for j in component if i != j]
    if -3 in bonds:
        return "G2"
    if -2 in bonds:
        if size == 4:
            return "F4"
        if size == 2:
            return "C2" if system.cartan_type.family in "CF" else "B2"
        squares = Counter(system.gram[i][i] for i in component)
        long_square = max(squares)
        return f"C{size}" if squares[long_square] == 1 else f"B{size}"

    degree = {i: len(system.neighbours[i] & component) for i in component}
    branch = next((i for i, value in degree.items() if value == 3), None)
    if branch is None:
        return f"A{size}"
    arms = []
    for start in system.neighbours[branch] & component:
        length, previous, current = 1, branch, start
        while nxt := [k for k in system.neighbours[current] & component if k != previous]:
            previous, current = current, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{size}"
    return f"E{size}"


def signature(system: RootSystem, nodes: Collection[int]) -> str:
    """Тип подсистемы Phi_J: "A1^2xA3"; пустое подмножество - "∅"."""
    counts = Counter(component_type(system, component) for component in components(system, nodes))
    if not counts:
        return "∅"
    parts = sorted(counts.items(), key=lambda item: (item[0][0], int(item[0][1:])))
    return "x".join(name if count == 1 else f"{name}^{count}" for name, count in parts)
