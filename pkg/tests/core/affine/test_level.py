import pytest

from core.affine.domain.exceptions import LevelTypeError, NonSphericalLevelError
from core.affine.domain.level import LevelType, is_spherical, spherical_levels
from core.affine.domain.quotient import semi_affine_quotient
from core.shared_kernel.units_of_work.workspace import Workspace


def test_parse() -> None:
    assert LevelType.parse("0,2", 3).nodes == frozenset({0, 2})
    assert LevelType.parse("-", 3).nodes == frozenset()
    assert str(LevelType.parse("2,0", 3)) == "{0,2}"
    assert LevelType.parse("1,3", 3).finite_nodes == frozenset({0, 2})
    with pytest.raises(LevelTypeError):
        LevelType.parse("4", 3)
    with pytest.raises(LevelTypeError):
        LevelType.parse("a", 3)


@pytest.mark.parametrize("type_text", ["A2", "B3", "G2", "C2"])
def test_full_affine_set_is_not_spherical(open_workspace, type_text: str) -> None:
    system = open_workspace(type_text).roots_engine
    everything = LevelType(frozenset(range(system.rank + 1)))
    assert not is_spherical(system, everything)
    assert all(is_spherical(system, LevelType(everything.nodes - {k})) for k in everything.nodes)


def test_spherical_levels_count(a2: Workspace) -> None:
    levels = spherical_levels(a2.roots_engine)
    assert len(levels) == 7
    assert levels[0] == LevelType(frozenset())
    assert len(spherical_levels(a2.roots_engine, with_affine=False)) == 4


def test_level_data(a2: Workspace) -> None:
    data = a2.level(LevelType(frozenset({0, 1})))
    assert len(data.elements) == 6
    assert data.longest_length == 3
    assert data.reflection_length == 1
    assert data.excess == 2
    assert data.contains(a2.affine_engine.simple(0))
    assert not data.contains(a2.affine_engine.simple(2))


def test_level_data_rejects_non_spherical(a2: Workspace) -> None:
    with pytest.raises(NonSphericalLevelError):
        a2.level(LevelType(frozenset({0, 1, 2})))


def test_semi_affine_quotient_a2(a2: Workspace) -> None:
    weyl = a2.weyl_engine
    quotient = semi_affine_quotient(weyl, LevelType(frozenset({0})))
    assert {str(w) for w in quotient} == {"1.2", "2.1", "1.2.1"}
    assert semi_affine_quotient(weyl, LevelType(frozenset())) == weyl.elements


@pytest.mark.parametrize("type_text", ["A3", "B2", "G2"])
def test_semi_affine_quotient_matches_min_coset_reps(open_workspace, type_text: str) -> None:
    workspace = open_workspace(type_text)
    weyl = workspace.weyl_engine
    for level in spherical_levels(workspace.roots_engine, with_affine=False):
        assert semi_affine_quotient(weyl, level) == weyl.min_coset_reps(level.finite_nodes)


def test_quotient_size_is_index(open_workspace) -> None:
    workspace = open_workspace("B3")
    weyl = workspace.weyl_engine
    for level in spherical_levels(workspace.roots_engine):
        size = len(workspace.level(level).elements)
        assert len(semi_affine_quotient(weyl, level)) * size == weyl.order
