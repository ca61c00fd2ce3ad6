import pytest

from core.shared_kernel.units_of_work.workspace import Workspace
from core.weyl.domain.conjugacy import InvolutionConjugacy
from core.weyl.domain.exceptions import NotInvolutionError


def test_a3_reflections(a3: Workspace) -> None:
    weyl, conjugacy = a3.weyl_engine, a3.conjugacy
    s1, s3 = weyl.parse("1"), weyl.parse("3")
    assert conjugacy.involutions_conjugate(s1, s3)
    assert not conjugacy.involutions_conjugate(s1, weyl.parse("1.3"))
    assert conjugacy.method == "orbit"


def test_d4_triality(open_workspace) -> None:
    workspace = open_workspace("D4")
    weyl = workspace.weyl_engine
    assert workspace.conjugacy.involutions_conjugate(weyl.parse("1"), weyl.parse("3"))
    assert workspace.conjugacy.involutions_conjugate(weyl.parse("1"), weyl.parse("4"))
    assert not workspace.conjugacy.involutions_conjugate(weyl.parse("1.3"), weyl.parse("3.4"))


def test_non_involution_rejected(a3: Workspace) -> None:
    weyl = a3.weyl_engine
    with pytest.raises(NotInvolutionError):
        a3.conjugacy.involutions_conjugate(weyl.parse("1.2"), weyl.parse("1"))


@pytest.mark.parametrize("type_text", ["A3", "B3", "D4"])
def test_canonical_form_agrees_with_orbits(open_workspace, type_text: str) -> None:
    """Оба метода дают одинаковое разбиение инволюций w_J на классы."""
    workspace = open_workspace(type_text)
    weyl = workspace.weyl_engine
    orbit = InvolutionConjugacy(weyl, orbit_bound=10**9)
    canonical = InvolutionConjugacy(weyl, orbit_bound=1)
    assert canonical.method == "canonical-form"
    rank = weyl.rank
    longest = [weyl.longest_element({k for k in range(rank) if mask >> k & 1}) for mask in range(1 << rank)]
    for a in longest:
        for b in longest:
            assert bool(orbit.involutions_conjugate(a, b)) == bool(canonical.involutions_conjugate(a, b))
