from collections import deque
from dataclasses import dataclass
from itertools import count
from typing import Literal

from loguru import logger

from core.weyl.domain.element import WeylElem
from core.weyl.domain.exceptions import NotInvolutionError
from core.weyl.domain.group import Nodes, WeylGroup

type ConjugacyMethod = Literal["orbit", "canonical-form"]


@dataclass(frozen=True, slots=True)
class ConjugacyVerdict:
    conjugate: bool
    method: ConjugacyMethod

    def __bool__(self) -> bool:
        return self.conjugate


class InvolutionConjugacy:
    """Проверка сопряжённости инволюций.

    Для |W| <= orbit_bound перебирается орбита под сопряжением простыми отражениями.
    Иначе каждая инволюция приводится к виду w_I, где w_I = -1 на оболочке Phi_I,
    и сравниваются классы W-эквивалентности подмножеств I.
    """

    def __init__(self, group: WeylGroup, orbit_bound: int = 1_000_000) -> None:
        self.group = group
        self.orbit_bound = orbit_bound
        self._orbits: dict[WeylElem, frozenset[WeylElem]] = {}
        self._keys: dict[WeylElem, tuple[int, ...]] = {}

    @property
    def method(self) -> ConjugacyMethod:
        return "orbit" if self.group.order <= self.orbit_bound else "canonical-form"

    def involutions_conjugate(self, a: WeylElem, b: WeylElem) -> ConjugacyVerdict:
        for name, element in (("a", a), ("b", b)):
            if not element.is_involution:
                raise NotInvolutionError(f"Элемент {element} не является инволюцией", field=name, id=str(element))
        if a.length % 2 != b.length % 2:
            return ConjugacyVerdict(False, self.method)
        if self.method == "orbit":
            return ConjugacyVerdict(b in self.orbit(a), "orbit")
        return ConjugacyVerdict(self.canonical_key(a) == self.canonical_key(b), "canonical-form")

    def orbit(self, w: WeylElem) -> frozenset[WeylElem]:
        if w not in self._orbits:
            seen = {w}
            queue = deque([w])
            while queue:
                current = queue.popleft()
                for i in range(self.group.rank):
                    image = current.left_mul_simple(i).right_mul_simple(i)
                    if image not in seen:
                        seen.add(image)
                        queue.append(image)
            orbit = frozenset(seen)
            for element in orbit:
                self._orbits[element] = orbit
        return self._orbits[w]

    def canonical_key(self, w: WeylElem) -> tuple[int, ...]:
        """Лексикографически минимальное подмножество I (с нуля) с w ~ w_I."""
        if w not in self._keys:
            nodes = self.fixed_parabolic(w)
            self._keys[w] = min(tuple(sorted(member)) for member in self.equivalence_class(nodes))
        return self._keys[w]

    def fixed_parabolic(self, w: WeylElem) -> Nodes:
        """Узлы I, для которых w сопряжён w_I с w_I = -1 на оболочке Phi_I.

        Берётся общий вектор h неподвижного пространства w, приводится в доминантную камеру;
        I - узлы, на которых доминантный представитель обращается в ноль.
        """
        system = self.group.system
        n = system.rank
        # <alpha_k, w(varpi_m^vee)> = коэффициент alpha_m в w(alpha_k) для инволюции w.
        images = [w.root_image_coords(k) for k in range(n)]
        minus_roots = sum(1 for r in range(system.n_positive) if w.act(r) == r + system.n_positive)
        for t in count():
            coefficients = [(t + 2) ** m for m in range(n)]
            h = [coefficients[k] + sum(coefficients[m] * images[k][m] for m in range(n)) for k in range(n)]
            orthogonal = sum(1 for root in system.positive_roots if system.pair_fundamental(root, h) == 0)
            if orthogonal == minus_roots:
                break
            logger.trace("Вектор {} не общий для {}, следующая попытка", h, w)
        while (i := next((k for k in range(n) if h[k] < 0), None)) is not None:
            h = list(system.reflect_fundamental(i, h))
        return frozenset(k for k in range(n) if h[k] == 0)

    def equivalence_class(self, nodes: Nodes) -> frozenset[Nodes]:
        """Класс W-эквивалентности подмножества простых узлов (элементарные ходы K -> w_L K w_L)."""
        n_positive = self.group.system.n_positive
        seen = {nodes}
        queue = deque([nodes])
        while queue:
            current = queue.popleft()
            for s in range(self.group.rank):
                if s in current:
                    continue
                longest = self.group.longest_element(current | {s})
                image = frozenset(longest.perm[j] - n_positive for j in current)
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return frozenset(seen)
