from fractions import Fraction

from loguru import logger

from core.affine.domain.element import AffineElem
from core.affine.domain.normal_form import eta
from core.dimension.domain.newton import NewtonDatum
from core.rootsys.domain.root_system import rho_pairing
from generic.domain.exceptions import VerificationError


def virtual_dimension(w: AffineElem, b: NewtonDatum) -> Fraction:
    """d_w(b) = 1/2 (l(w) + l(eta(w)) - def(b) - <2rho, nu(b)>)."""
    if b.kappa is not None and b.kappa != w.component:
        logger.warning("Класс Коттвица [b] не совпадает с компонентой {}", w)
    value = Fraction(w.length + eta(w).length - b.defect, 2) - rho_pairing(b.nu)
    if (2 * value).denominator != 1:
        raise VerificationError(f"d_w(b) = {value} не полуцелое", entity="VirtualDimension", id=str(w))
    return value
