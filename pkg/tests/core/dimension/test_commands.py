from fractions import Fraction

import pytest
from pydantic import ValidationError

from core.dimension.application.commands.evaluate import dimension, product
from core.dimension.application.commands.verify import d_adm
from core.rootsys.domain.cartan import CartanType
from core.shared_kernel.units_of_work.workspace import Workspace


def test_dimension_command(new_workspace) -> None:
    dto = dimension.Command(new_workspace("A2")).execute(dimension.Payload(mu="3,3"))
    assert dto.value == 7
    assert dto.case == "i"
    assert dto.inputs_echo.level == "{}"
    assert dto.inputs_echo.nu == "[0,0]"
    assert dto.hypotheses.gap.variant == "wt"
    dumped = dto.model_dump(mode="json", by_alias=True)
    assert dumped["value"] == "7"
    assert dumped["inputsEcho"]["cartanType"] == "A2"
    assert dumped["hypotheses"]["regularity"]["twoRegular"] is True


def test_dimension_command_fundamental_coordinates(new_workspace) -> None:
    dto = dimension.Command(new_workspace("A2")).execute(
        dimension.Payload(mu="3,3", mu_coords="fundamental", level="1,2")
    )
    assert dto.value == 6
    assert dto.inputs_echo.mu == "[3,3]"


def test_dimension_command_with_slopes(new_workspace) -> None:
    dto = dimension.Command(new_workspace("A2")).execute(dimension.Payload(mu="3,3", slopes="1/3,1/3,1/3"))
    assert dto.inputs_echo.defect == 2
    assert dto.value == 6


def test_dimension_payload_rejects_nu_with_slopes() -> None:
    with pytest.raises(ValidationError):
        dimension.Payload(mu="1,1", nu="0,0", slopes="0,0,0")


def test_product_command(new_workspace) -> None:
    factor = {"mu": "3,3", "cartan_type": "A2"}
    dto = product.Command(lambda cartan_type: new_workspace(str(cartan_type))).execute(
        product.Payload(factors=[factor, factor | {"level": "1,2"}])
    )
    assert dto.value == 13
    assert [f.value for f in dto.factors] == [7, 6]


def test_product_payload_needs_factors() -> None:
    with pytest.raises(ValidationError):
        product.Payload(factors=[])


def test_d_adm_suite_a2(new_workspace) -> None:
    report = d_adm.Command(new_workspace("A2")).execute(d_adm.Payload(depths=[4]))
    sections = {section.name: section.rows for section in report.sections}
    assert set(sections) == {"d-adm", "left-part", "witnesses", "omega"}
    finite = [row for row in sections["d-adm"] if "0" not in row.level]
    assert all(row.status == "ok" and row.brute == row.closed for row in finite)
    affine = [row for row in sections["d-adm"] if "0" in row.level]
    assert {row.status for row in affine} == {"skipped"}
    assert report.exit_code == 0
    assert len(sections["witnesses"]) == 1 + 6


def test_d_adm_suite_without_extras(new_workspace) -> None:
    report = d_adm.Command(new_workspace("A2")).execute(
        d_adm.Payload(depths=[4, 4], levels=["1"], all_levels=False, extras=False)
    )
    (section,) = report.sections
    (row,) = section.rows
    assert row.brute == row.closed == Fraction(9)


def test_d_adm_suite_over_budget(budget) -> None:
    workspace = Workspace(CartanType.parse("A2"), budget.model_copy(update={"adm_cap": 10}))
    report = d_adm.Command(workspace).execute(d_adm.Payload(depths=[4], levels=["1"], all_levels=False))
    assert report.exit_code == 3
    assert report.sections[0].rows[0].status == "budget_exceeded"
