from dataclasses import dataclass

from core.affine.domain.element import AffineElem, Translation
from core.weyl.domain.element import WeylElem


@dataclass(frozen=True, slots=True)
class NormalForm:
    """w = u t^lambda v, lambda доминантный и t^lambda v in ^S W~."""

    u: WeylElem
    dominant: Translation
    v: WeylElem

    @property
    def p_l(self) -> WeylElem:
        return self.u

    @property
    def eta(self) -> WeylElem:
        """eta(w) = vu."""
        return self.v * self.u

    @property
    def depth(self) -> int:
        return min(self.dominant)


def normal_form(w: AffineElem) -> NormalForm:
    """Разложение w = t^beta y в виде u t^lambda v."""
    system = w.system
    current = list(w.translation)
    u = WeylElem(tuple(range(system.n_positive)), system)
    while (i := next((k for k, p in enumerate(current) if p < 0), None)) is not None:
        current = list(system.reflect_fundamental(i, current))
        u = u.right_mul_simple(i)
    stabilizer = [k for k, p in enumerate(current) if p == 0]

    v = u.inverse * w.finite
    while (j := next((k for k in stabilizer if v.has_left_descent(k)), None)) is not None:
        v = v.left_mul_simple(j)
    return NormalForm(u=w.finite * v.inverse, dominant=tuple(current), v=v)


def p_l(w: AffineElem) -> WeylElem:
    return normal_form(w).u


def eta(w: AffineElem) -> WeylElem:
    return normal_form(w).eta
