from core.theorems.application.commands.verify import constructions, decompositions, min_distance


def test_min_distance_suite_c2_affine(new_workspace) -> None:
    report = min_distance.Command(new_workspace("C2")).execute(
        min_distance.Payload(all_levels=True, with_affine=True)
    )
    (section,) = report.sections
    assert report.suite == "min-distance"
    assert report.cartan_type == "C2"
    assert len(section.rows) == 7
    assert report.exit_code == 0
    assert all(row.match for row in section.rows)


def test_min_distance_suite_selected_levels(new_workspace) -> None:
    report = min_distance.Command(new_workspace("A2")).execute(min_distance.Payload(levels=["1", "0"]))
    rows = report.sections[0].rows
    assert [row.level for row in rows] == ["{1}", "{0}"]
    assert rows[0].argmin == ["2"]


def test_constructions_suite(new_workspace) -> None:
    report = constructions.Command(new_workspace("A3")).execute(
        constructions.Payload(all_levels=True, with_affine=True)
    )
    names = [section.name for section in report.sections]
    assert names == ["constructions", "factors", "witnesses"]
    assert report.exit_code == 0
    assert len(report.sections[0].rows) == 8


def test_constructions_suite_b4_witnesses(new_workspace) -> None:
    report = constructions.Command(new_workspace("B4")).execute(
        constructions.Payload(levels=["0,1,3,4"], with_affine=True)
    )
    (row,) = report.sections[-1].rows
    assert row.witnesses == 0
    assert row.witness_min is None


def test_decompositions_suite_f4(new_workspace) -> None:
    report = decompositions.Command(new_workspace("F4")).execute(decompositions.Payload())
    sections = {section.name: section for section in report.sections}
    assert set(sections) == {"tables", "decompositions"}
    assert len(sections["tables"].rows) == 5
    assert report.exit_code == 0


def test_decompositions_suite_g2(new_workspace) -> None:
    report = decompositions.Command(new_workspace("G2")).execute(
        decompositions.Payload(all_levels=True, with_affine=True)
    )
    assert report.exit_code == 0
    rows = {row.level: row for row in report.sections[-1].rows}
    assert rows["{1}"].subset == "{2}"


def test_decompositions_suite_c3(new_workspace) -> None:
    report = decompositions.Command(new_workspace("C3")).execute(decompositions.Payload())
    assignments = report.sections[0]
    assert assignments.name == "assignments"
    assert len(assignments.rows) == 8
    assert report.exit_code == 0


def test_deep_tables_are_skipped(new_workspace) -> None:
    report = decompositions.Command(new_workspace("E8")).execute(decompositions.Payload(levels=["-"]))
    tables = report.sections[0]
    assert {row.status for row in tables.rows} == {"skipped"}
    assert report.sections[-1].rows[0].status == "budget_exceeded"
    assert report.exit_code == 3


def test_constructions_suite_reports_search_fallback(new_workspace, monkeypatch) -> None:
    monkeypatch.setattr("core.theorems.domain.constructions.type_a_factor", lambda m, j: [])
    report = constructions.Command(new_workspace("A3")).execute(constructions.Payload())
    (row,) = report.sections[0].rows
    assert row.method == "search"
    assert row.note == "множитель найден перебором"
    assert "search" in {step.method for step in report.sections[1].rows}
