import pytest

from core.affine.domain.level import LevelType, spherical_levels
from core.affine.domain.quotient import semi_affine_quotient
from core.shared_kernel.units_of_work.workspace import Workspace
from core.theorems.domain.exceptions import TheoremInputError
from core.theorems.domain.min_distance import min_distance_scan, theorem_min_rhs, verify_key_lemma


@pytest.mark.parametrize(("nodes", "rhs"), [((), 1), ((1, 2), 3), ((1,), 1), ((0,), 1), ((0, 1), 3)])
def test_rhs_a2(a2: Workspace, nodes: tuple[int, ...], rhs: int) -> None:
    assert theorem_min_rhs(a2.qbg, a2.level(LevelType(frozenset(nodes)))) == rhs


def test_scan_a2_finite_level(a2: Workspace) -> None:
    report = min_distance_scan(a2.qbg, a2.level(LevelType(frozenset({1}))))
    assert report.quotient_size == 3
    assert report.min_value == 1
    assert [str(x) for x in report.argmin] == ["2"]
    assert report.match
    assert report.violations == ()


def test_scan_a2_affine_level(a2: Workspace) -> None:
    report = min_distance_scan(a2.qbg, a2.level(LevelType(frozenset({0}))))
    assert report.quotient_size == 3
    assert report.min_value == report.rhs == 1


@pytest.mark.parametrize("type_text", ["A1", "A2", "A3", "B2", "C2", "G2"])
def test_scan_matches_for_all_levels(open_workspace, type_text: str) -> None:
    workspace = open_workspace(type_text)
    for level in spherical_levels(workspace.roots_engine):
        report = min_distance_scan(workspace.qbg, workspace.level(level))
        assert report.match, level


def test_scan_does_not_depend_on_threads(b2: Workspace) -> None:
    level = b2.level(LevelType(frozenset({0})))
    assert min_distance_scan(b2.qbg, level, threads=1) == min_distance_scan(b2.qbg, level, threads=3)


@pytest.mark.slow
@pytest.mark.parametrize("type_text", ["A4", "B3", "C3", "D4"])
def test_scan_matches_rank_three_and_four(open_workspace, type_text: str) -> None:
    workspace = open_workspace(type_text)
    for level in spherical_levels(workspace.roots_engine):
        assert min_distance_scan(workspace.qbg, workspace.level(level), threads=2).match, level


def test_key_lemma_a2(a2: Workspace) -> None:
    level = a2.level(LevelType(frozenset({0})))
    check = verify_key_lemma(a2.qbg, level, a2.weyl_engine.w0, a2.affine_engine.simple(0))
    assert check.holds
    assert check.length_y == 1


def test_key_lemma_exhaustive_b2(b2: Workspace) -> None:
    for nodes in ({0}, {0, 2}, {1}):
        level = b2.level(LevelType(frozenset(nodes)))
        for x in semi_affine_quotient(b2.weyl_engine, level.level):
            for y in level.elements:
                assert verify_key_lemma(b2.qbg, level, x, y).holds


def test_key_lemma_rejects_inputs(a2: Workspace) -> None:
    level = a2.level(LevelType(frozenset({0})))
    weyl, affine = a2.weyl_engine, a2.affine_engine
    with pytest.raises(TheoremInputError):
        verify_key_lemma(a2.qbg, level, weyl.identity, affine.simple(0))
    with pytest.raises(TheoremInputError):
        verify_key_lemma(a2.qbg, level, weyl.w0, affine.simple(1))
