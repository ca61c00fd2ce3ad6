from fractions import Fraction

import pytest

from core.dimension.domain.exceptions import NewtonDatumError, NotNeutrallyAcceptableError
from core.dimension.domain.newton import (
    NewtonDatum,
    defect_type_A,
    kottwitz_class,
    newton_datum_from_slopes,
    newton_from_slopes,
    parse_kappa,
)
from core.rootsys.domain.root_system import CoweightQ
from core.shared_kernel.units_of_work.workspace import Workspace


@pytest.mark.parametrize(
    ("slopes", "expected"),
    [(["0", "0", "0"], 0), (["1/2", "1/2", "0"], 1), (["1", "0", "0"], 0), (["1/3", "1/3", "1/3"], 2)],
)
def test_defect_type_a(slopes: list[str], expected: int) -> None:
    assert defect_type_A(3, slopes) == expected


@pytest.mark.parametrize("slopes", [["1/2", "0", "0"], ["0", "1", "0"], ["0", "0"]])
def test_defect_type_a_rejects(slopes: list[str]) -> None:
    with pytest.raises(NewtonDatumError):
        defect_type_A(3, slopes)


def test_newton_from_slopes(a2: Workspace) -> None:
    nu = newton_from_slopes(a2.roots_engine, ["1", "1/2", "1/2"])
    assert nu.fundamental == (Fraction(1, 2), Fraction(0))
    datum = newton_datum_from_slopes(a2.roots_engine, ["1", "1/2", "1/2"])
    assert datum.defect == 1
    assert datum.kappa is None


def test_newton_from_slopes_requires_type_a(b2: Workspace) -> None:
    with pytest.raises(NewtonDatumError):
        newton_from_slopes(b2.roots_engine, ["1", "0", "0"])


def test_kottwitz_class(a2: Workspace) -> None:
    system = a2.roots_engine
    assert kottwitz_class(system.rho_check) == (0, 0)
    assert kottwitz_class(system.fundamental_coweight(1)) == (Fraction(2, 3), Fraction(1, 3))
    assert parse_kappa(system, "0") == (0, 0)
    assert parse_kappa(system, None) is None
    assert parse_kappa(system, "5/3,4/3") == (Fraction(2, 3), Fraction(1, 3))


def test_newton_datum_validation(a2: Workspace) -> None:
    system = a2.roots_engine
    with pytest.raises(NewtonDatumError):
        NewtonDatum(CoweightQ.parse(system, "-1,0"), None, 0)
    with pytest.raises(NewtonDatumError):
        NewtonDatum(system.zero, None, 3)
    assert NewtonDatum.basic(system) == NewtonDatum(system.zero, None, 0)


def test_neutral_acceptability(a2: Workspace) -> None:
    system = a2.roots_engine
    mu = system.rho_check
    NewtonDatum(mu, None, 0).check_acceptable(mu, "adjoint")
    with pytest.raises(NotNeutrallyAcceptableError):
        NewtonDatum(mu * 2, None, 0).check_acceptable(mu, "adjoint")
    with pytest.raises(NotNeutrallyAcceptableError) as info:
        NewtonDatum(system.zero, parse_kappa(system, "2/3,1/3"), 0).check_acceptable(mu, "adjoint")
    assert info.value.tech_details["required"] == "['0', '0']"
    NewtonDatum(system.zero, parse_kappa(system, "2/3,1/3"), 0).check_acceptable(mu, "sc")
