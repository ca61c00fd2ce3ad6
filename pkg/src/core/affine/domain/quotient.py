from core.affine.domain.exceptions import NonSphericalLevelError
from core.affine.domain.level import LevelType, is_spherical
from core.weyl.domain.element import WeylElem
from core.weyl.domain.group import WeylGroup


def in_semi_affine_quotient(w: WeylElem, level: LevelType) -> bool:
    """w in ^J W: w^{-1} bar(alpha)_s > 0 для s in J, где bar(alpha)_{s_0} = -theta."""
    system = w.system
    inverse = w.inverse
    if 0 in level.nodes and inverse.perm[system.theta] < system.n_positive:
        return False
    return not any(inverse.perm[j] >= system.n_positive for j in level.finite_nodes)


def semi_affine_quotient(weyl: WeylGroup, level: LevelType) -> tuple[WeylElem, ...]:
    """^J W в порядке перечисления группы; для J ⊆ S совпадает с min_coset_reps."""
    if not is_spherical(weyl.system, level):
        raise NonSphericalLevelError(f"Уровень {level} не сферический для {weyl.system}", field="level", id=str(level))
    return tuple(w for w in weyl.elements if in_semi_affine_quotient(w, level))
