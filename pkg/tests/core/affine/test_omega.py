import pytest

from core.affine.domain.level import LevelType, spherical_levels
from core.shared_kernel.units_of_work.workspace import Workspace


@pytest.mark.parametrize(
    ("type_text", "lattice", "size"),
    [("A2", "adjoint", 3), ("A2", "sc", 1), ("A3", "adjoint", 4), ("B3", "adjoint", 2), ("D4", "adjoint", 4),
     ("E8", "adjoint", 1), ("F4", "adjoint", 1), ("G2", "adjoint", 1)],
)
def test_omega_size(open_workspace, type_text: str, lattice: str, size: int) -> None:
    assert len(open_workspace(type_text, lattice=lattice).omega.elements) == size


@pytest.mark.parametrize("type_text", ["A2", "A3", "C3", "D4"])
def test_omega_elements_are_diagram_automorphisms(open_workspace, type_text: str) -> None:
    workspace = open_workspace(type_text)
    affine = workspace.affine_engine
    for tau in workspace.omega.elements:
        assert tau.element.length == 0
        assert sorted(tau.permutation) == list(affine.nodes)
        for k in affine.nodes:
            assert affine.conjugate(tau.element, affine.simple(k)) == affine.simple(tau.permutation[k])


def test_transport_a3(a3: Workspace) -> None:
    found = a3.omega.transport_into_finite(LevelType(frozenset({0, 2})))
    assert found is not None
    tau, image = found
    assert image.is_finite_part
    assert image == LevelType(frozenset({1, 3}))
    assert tau.node is not None


def test_transport_trivial_for_finite_levels(a3: Workspace) -> None:
    tau, image = a3.omega.transport_into_finite(LevelType(frozenset({1, 2})))
    assert tau.node is None
    assert image == LevelType(frozenset({1, 2}))


def test_ad_preserves_levels(a3: Workspace) -> None:
    affine = a3.affine_engine
    sample = [affine.parse_word(word) for word in ("e", "0", "1.0", "2.3.0", "0.1.2.3", "3.2.0.1")]
    for tau in a3.omega.elements:
        for level in spherical_levels(a3.roots_engine):
            image = a3.omega.ad_tau(tau, level)
            assert len(a3.level(image).elements) == len(a3.level(level).elements)
            for w in sample:
                moved = affine.conjugate(tau.element, w)
                assert affine.is_min_coset_rep(w, level.nodes) == affine.is_min_coset_rep(moved, image.nodes)
