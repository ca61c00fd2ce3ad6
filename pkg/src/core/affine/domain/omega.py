from dataclasses import dataclass
from functools import cached_property

from loguru import logger

from core.affine.domain.element import AffineElem
from core.affine.domain.group import AffineGroup
from core.affine.domain.level import LevelType
from generic.domain.exceptions import VerificationError


@dataclass(frozen=True, slots=True)
class OmegaElem:
    """Элемент длины ноль tau и индуцированная перестановка аффинных узлов."""

    element: AffineElem
    # Узел Бурбаки минускульного кохарактера; None для единицы.
    node: int | None
    permutation: tuple[int, ...]

    def ad(self, level: LevelType) -> LevelType:
        """Ad(tau)(J)."""
        return LevelType(frozenset(self.permutation[j] for j in level.nodes))

    def __str__(self) -> str:
        return "1" if self.node is None else f"τ{self.node}"


class OmegaGroup:
    """Omega = P^vee/Q^vee для присоединённой решётки; тривиальна для односвязной."""

    def __init__(self, affine: AffineGroup) -> None:
        self.affine = affine

    @cached_property
    def elements(self) -> tuple[OmegaElem, ...]:
        affine = self.affine
        identity = OmegaElem(affine.identity, None, tuple(affine.nodes))
        if affine.lattice == "sc":
            return (identity,)
        system = affine.system
        weyl = affine.weyl
        theta = system.positive_roots[system.theta]
        result = [identity]
        for i in range(system.rank):
            if theta[i] != 1:
                continue
            finite = weyl.longest_element(frozenset(range(system.rank)) - {i}) * weyl.w0
            tau = AffineElem(tuple(int(k == i) for k in range(system.rank)), finite)
            if tau.length:
                raise VerificationError(
                    f"Элемент tau_{i + 1} имеет длину {tau.length}", entity="OmegaElem", id=f"{system}:{i + 1}"
                )
            result.append(OmegaElem(tau, i + 1, self._permutation(tau)))
        logger.debug("|Omega| = {} для {}", len(result), system)
        return tuple(result)

    def _permutation(self, tau: AffineElem) -> tuple[int, ...]:
        affine = self.affine
        simple = {affine.simple(k): k for k in affine.nodes}
        return tuple(simple[affine.conjugate(tau, affine.simple(k))] for k in affine.nodes)

    def ad_tau(self, tau: OmegaElem, level: LevelType) -> LevelType:
        return tau.ad(level)

    def transport_into_finite(self, level: LevelType) -> tuple[OmegaElem, LevelType] | None:
        """Первый tau с Ad(tau)(J) ⊆ S, если такой есть."""
        for tau in self.elements:
            image = tau.ad(level)
            if image.is_finite_part:
                return tau, image
        return None
