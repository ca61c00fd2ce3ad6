from itertools import combinations

import pytest

from core.shared_kernel.units_of_work.workspace import Workspace
from core.theorems.domain.assignments import classical_assignment
from core.theorems.domain.decomposition import certify_assignment
from core.theorems.domain.exceptions import TheoremInputError, UnsupportedCartanTypeError


@pytest.mark.parametrize(
    ("type_text", "nodes", "expected"),
    [
        ("A5", {0, 1}, {1, 2, 3}),
        ("A5", set(), set(range(5))),
        ("A3", {0, 1, 2}, set()),
        ("C3", {2}, {1, 2}),
        ("B3", set(), {0, 1, 2}),
        ("D8", set(range(8)) - {6}, {0, 2, 4, 7}),
        ("D4", set(), {0, 1, 2, 3}),
        ("D4", {0, 3}, {0, 3}),
        ("D4", {0, 2}, {0, 2}),
        ("D4", {3}, {0, 2, 3}),
        ("D5", {0, 4}, {0, 2}),
        ("D6", {0, 2, 4}, {0, 2, 5}),
        ("D6", {0, 2, 5}, {0, 2, 4}),
    ],
)
def test_classical_assignment(open_workspace, type_text: str, nodes: set[int], expected: set[int]) -> None:
    weyl = open_workspace(type_text).weyl_engine
    assert classical_assignment(weyl, nodes) == frozenset(expected)


def test_assignment_rejects_exceptional(g2: Workspace) -> None:
    with pytest.raises(UnsupportedCartanTypeError):
        classical_assignment(g2.weyl_engine, {0})


def test_assignment_rejects_affine_node(a2: Workspace) -> None:
    with pytest.raises(TheoremInputError):
        classical_assignment(a2.weyl_engine, {2})


@pytest.mark.parametrize("type_text", ["A2", "A3", "A4", "B2", "B3", "C3", "D4"])
def test_assignments_certified(open_workspace, type_text: str) -> None:
    workspace = open_workspace(type_text)
    weyl = workspace.weyl_engine
    for size in range(weyl.rank + 1):
        for nodes in combinations(range(weyl.rank), size):
            certificate = certify_assignment(weyl, workspace.conjugacy, frozenset(nodes))
            assert certificate.certified, nodes


@pytest.mark.slow
@pytest.mark.parametrize("type_text", ["B4", "C4", "D5", "A5"])
def test_assignments_certified_rank_five(open_workspace, type_text: str) -> None:
    workspace = open_workspace(type_text)
    weyl = workspace.weyl_engine
    for size in range(weyl.rank + 1):
        for nodes in combinations(range(weyl.rank), size):
            assert certify_assignment(weyl, workspace.conjugacy, frozenset(nodes)).certified, nodes


def test_assignment_single_fork_node_d4(open_workspace) -> None:
    workspace = open_workspace("D4")
    certificate = certify_assignment(workspace.weyl_engine, workspace.conjugacy, frozenset({0, 3}))
    assert certificate.subset == frozenset({0, 3})
    assert certificate.conjugate
    assert certificate.additive


@pytest.mark.slow
@pytest.mark.parametrize("type_text", ["D6"])
def test_assignments_certified_single_fork_node(open_workspace, type_text: str) -> None:
    workspace = open_workspace(type_text)
    weyl = workspace.weyl_engine
    n = weyl.rank
    for size in range(n - 1):
        for chosen in combinations(range(n - 2), size):
            nodes = frozenset(chosen) | {n - 1}
            assert certify_assignment(weyl, workspace.conjugacy, nodes).certified, sorted(nodes)
