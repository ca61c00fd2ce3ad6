from collections import deque
from collections.abc import Sequence
from functools import lru_cache

from loguru import logger

from core.affine.domain.element import AffineElem, Translation
from core.affine.domain.exceptions import AffineElemError
from core.affine.domain.group import AffineGroup
from core.affine.domain.level import LevelType
from core.affine.domain.normal_form import normal_form
from core.rootsys.domain.root_system import RootSystem
from generic.domain.exceptions import BudgetExceededError


def two_rho_pairing(system: RootSystem, fundamental: Sequence[int]) -> int:
    """<2rho, mu> = сумма <alpha, mu> по положительным корням."""
    return sum(system.pair_fundamental(root, fundamental) for root in system.positive_roots)


def weyl_orbit(system: RootSystem, fundamental: Sequence[int]) -> list[Translation]:
    start = tuple(fundamental)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for i in range(system.rank):
            image = system.reflect_fundamental(i, current)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen)


def lower_interval(affine: AffineGroup, w: AffineElem) -> set[AffineElem]:
    """{z : z <= w} как множество подслов одного приведённого слова w."""
    letters, tau = affine.word(w)
    current = {tau}
    for k in reversed(letters):
        generator = affine.simple(k)
        current |= {generator * z for z in current}
    return current


@lru_cache(maxsize=16)
def admissible_set(affine: AffineGroup, mu: Translation, adm_cap: int) -> frozenset[AffineElem]:
    """Adm(mu) = {w : w <= t^{x(mu)} для некоторого x in W}; mu - кортеж (ключ кэша)."""
    system = affine.system
    translation = affine.check_translation(mu)
    if any(p < 0 for p in translation):
        raise AffineElemError(f"Кохарактер {translation} не доминантный", field="mu", id=str(translation))
    measured = two_rho_pairing(system, translation)
    if measured > adm_cap:
        raise BudgetExceededError(setting="adm_cap", limit=adm_cap, measured=measured)

    result: set[AffineElem] = set()
    for point in weyl_orbit(system, translation):
        result |= lower_interval(affine, affine.translation(point))
    logger.debug("|Adm({})| = {} для {}", list(translation), len(result), system)
    return frozenset(result)


def j_admissible(affine: AffineGroup, mu: Translation, level: LevelType, adm_cap: int) -> frozenset[AffineElem]:
    """^J Adm(mu) = Adm(mu) ∩ ^J W~."""
    return frozenset(
        w for w in admissible_set(affine, mu, adm_cap) if affine.is_min_coset_rep(w, sorted(level.nodes))
    )


def above_one(elements: frozenset[AffineElem]) -> frozenset[AffineElem]:
    """Часть _{>1}: элементы, доминантный сдвиг которых имеет глубину не меньше 2."""
    return frozenset(w for w in elements if normal_form(w).depth >= 2)
