from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import islice
from typing import Literal

import networkx as nx
from loguru import logger

from core.rootsys.domain.root_system import CoweightQ
from core.rootsys.domain.types import IntVector
from core.weyl.domain.element import WeylElem
from core.weyl.domain.group import WeylGroup
from generic.domain.exceptions import VerificationError

type Direction = Literal["up", "down"]


@dataclass(frozen=True, slots=True)
class QBGEdge:
    source: int
    target: int
    root: int
    direction: Direction
    weight: IntVector


@dataclass(frozen=True, slots=True)
class Sweep:
    """Обход в ширину из одной вершины: расстояния и родительские рёбра."""

    distances: dict[int, int]
    parents: dict[int, int]


class QuantumBruhatGraph:
    """Квантовый граф Брюа на элементах конечной группы Вейля.

    Вершины - индексы элементов в WeylGroup.elements. Ребро w -> w s_alpha есть, если
    l(w s_alpha) = l(w) + 1 (вверх, вес 0) или l(w s_alpha) = l(w) - <2rho, alpha^vee> + 1
    (вниз, вес alpha^vee).
    """

    def __init__(self, weyl: WeylGroup, bfs_cache_size: int = 256, path_cap: int = 10_000) -> None:
        self.weyl = weyl
        self.system = weyl.system
        self.path_cap = path_cap
        self.graph = self._build()
        self.sweep = lru_cache(maxsize=bfs_cache_size)(self._sweep)

    def _build(self) -> nx.DiGraph:
        elements = self.weyl.elements
        system = self.system
        zero = (0,) * system.rank
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(elements)))
        logger.info("Построение квантового графа Брюа {} (|W| = {})", system, len(elements))
        for source, w in enumerate(elements):
            out_degree = 0
            for r, reflection in enumerate(self.weyl.reflections):
                image = w * reflection
                if image.length == w.length + 1:
                    graph.add_edge(source, self.weyl.index_of(image), root=r, down=False, weight=zero)
                elif image.length == w.length - 2 * system.coroot_heights[r] + 1:
                    graph.add_edge(
                        source, self.weyl.index_of(image), root=r, down=True, weight=system.positive_coroots[r]
                    )
                else:
                    continue
                out_degree += 1
            if out_degree > system.n_positive:
                raise VerificationError(
                    f"Исходящая степень вершины {w} равна {out_degree} > {system.n_positive}", entity="QBGraph"
                )
        logger.debug("Рёбер в графе {}: {}", system, graph.number_of_edges())
        return graph

    def index(self, w: WeylElem) -> int:
        return self.weyl.index_of(w)

    def element(self, index: int) -> WeylElem:
        return self.weyl.elements[index]

    def edges_from(self, w: WeylElem) -> list[QBGEdge]:
        source = self.index(w)
        return [
            QBGEdge(source, target, data["root"], "down" if data["down"] else "up", data["weight"])
            for target, data in sorted(self.graph[source].items())
        ]

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    @cached_property
    def is_strongly_connected(self) -> bool:
        return nx.is_strongly_connected(self.graph)

    def _sweep(self, source: int) -> Sweep:
        distances = {source: 0}
        parents = {}
        for parent, child in nx.bfs_edges(self.graph, source):
            distances[child] = distances[parent] + 1
            parents[child] = parent
        return Sweep(distances, parents)

    def shortest_path(self, x: WeylElem, y: WeylElem) -> list[int]:
        return nx.bidirectional_shortest_path(self.graph, self.index(x), self.index(y))

    def distance(self, x: WeylElem, y: WeylElem) -> int:
        """d(x, y)."""
        return len(self.shortest_path(x, y)) - 1

    def bounded_distance(self, source: int, target: int, cutoff: int) -> int | None:
        """d(source, target), если оно не больше cutoff, иначе None (двусторонний обход по слоям)."""
        if source == target:
            return 0
        succ, pred = self.graph.succ, self.graph.pred
        forward, backward = {source: 0}, {target: 0}
        forward_front, backward_front = [source], [target]
        forward_depth = backward_depth = 0
        while forward_depth + backward_depth < cutoff and forward_front and backward_front:
            if len(forward_front) <= len(backward_front):
                forward_depth += 1
                next_front = []
                for node in forward_front:
                    for neighbour in succ[node]:
                        if neighbour in backward:
                            return forward_depth + backward[neighbour]
                        if neighbour not in forward:
                            forward[neighbour] = forward_depth
                            next_front.append(neighbour)
                forward_front = next_front
            else:
                backward_depth += 1
                next_front = []
                for node in backward_front:
                    for neighbour in pred[node]:
                        if neighbour in forward:
                            return backward_depth + forward[neighbour]
                        if neighbour not in backward:
                            backward[neighbour] = backward_depth
                            next_front.append(neighbour)
                backward_front = next_front
        return None

    def path_weight(self, path: Iterable[int]) -> IntVector:
        nodes = list(path)
        total = [0] * self.system.rank
        for source, target in zip(nodes, nodes[1:]):
            for k, c in enumerate(self.graph.edges[source, target]["weight"]):
                total[k] += c
        return tuple(total)

    def weight(self, x: WeylElem, y: WeylElem) -> IntVector:
        """wt(x, y) в базисе простых кокорней: вес одного кратчайшего пути."""
        return self.path_weight(self.shortest_path(x, y))

    def weight_coweight(self, x: WeylElem, y: WeylElem) -> CoweightQ:
        return CoweightQ(self.system, tuple(Fraction(c) for c in self.weight(x, y)))

    def sweep_distance(self, source: int, target: int) -> int:
        return self.sweep(source).distances[target]

    def sweep_weight(self, source: int, target: int) -> IntVector:
        """Вес пути по родительским рёбрам обхода из source."""
        parents = self.sweep(source).parents
        path = [target]
        while path[-1] != source:
            path.append(parents[path[-1]])
        return self.path_weight(reversed(path))

    def all_shortest_paths(self, x: WeylElem, y: WeylElem) -> Iterator[list[int]]:
        """Не более path_cap кратчайших путей."""
        return islice(nx.all_shortest_paths(self.graph, self.index(x), self.index(y)), self.path_cap)

    def longer_paths(self, x: WeylElem, y: WeylElem, extra: int = 2, limit: int = 100) -> Iterator[list[int]]:
        """Простые пути длиннее кратчайшего не более чем на extra рёбер."""
        source, target = self.index(x), self.index(y)
        shortest = self.distance(x, y)
        paths = nx.all_simple_paths(self.graph, source, target, cutoff=shortest + extra)
        return islice((path for path in paths if len(path) - 1 > shortest), limit)

    @cached_property
    def wt_w0_1(self) -> IntVector:
        """wt(w_0, 1)."""
        return self.weight(self.weyl.w0, self.weyl.identity)

    @cached_property
    def d_w0_1(self) -> int:
        """d(w_0, 1)."""
        return self.distance(self.weyl.w0, self.weyl.identity)

    def interval(self, lower: WeylElem, upper: WeylElem) -> list[int]:
        """Вершины интервала Брюа [lower, upper]."""
        return [
            index
            for index, w in enumerate(self.weyl.elements)
            if self.weyl.bruhat_le(lower, w) and self.weyl.bruhat_le(w, upper)
        ]

    def to_dot(self, vertices: Iterable[int] | None = None) -> str:
        """DOT-представление графа (или подграфа на vertices) с подписями-словами."""
        subgraph = self.graph.subgraph(vertices) if vertices is not None else self.graph
        labelled = nx.DiGraph(name=f"QBG_{self.system}")
        for node in sorted(subgraph.nodes):
            labelled.add_node(node, label=f'"{self.element(node)}"')
        for source, target, data in sorted(subgraph.edges(data=True)):
            root = self.system.positive_roots[data["root"]]
            label = f"{'v' if data['down'] else '^'}{list(root)}"
            labelled.add_edge(source, target, label=f'"{label}"', style="dashed" if data["down"] else "solid")
        return nx.nx_pydot.to_pydot(labelled).to_string()
