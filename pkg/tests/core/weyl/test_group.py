import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.shared_kernel.units_of_work.workspace import Workspace
from core.weyl.domain.dynkin import signature
from core.weyl.domain.element import format_nodes
from core.weyl.domain.exceptions import ParabolicSubsetError, WeylElemError


def test_group_enumeration_a2(a2: Workspace) -> None:
    weyl = a2.weyl_engine
    assert len(weyl.elements) == 6
    assert weyl.elements[0] == weyl.identity
    assert [w.length for w in weyl.elements] == sorted(w.length for w in weyl.elements)


def test_words_and_parsing(a2: Workspace) -> None:
    weyl = a2.weyl_engine
    assert weyl.parse("1.2.1") == weyl.parse("2.1.2") == weyl.w0
    assert str(weyl.w0) == "1.2.1"
    assert weyl.parse("w0") == weyl.w0
    assert weyl.parse("e") == weyl.identity
    assert str(weyl.identity) == "e"


@pytest.mark.parametrize(
    ("text", "error"), [("1.x", WeylElemError), ("4", ParabolicSubsetError), ("0.1", ParabolicSubsetError)]
)
def test_parse_rejects_bad_words(a2: Workspace, text: str, error: type[Exception]) -> None:
    with pytest.raises(error):
        a2.weyl_engine.parse(text)


def test_bruhat_order(a2: Workspace) -> None:
    weyl = a2.weyl_engine
    s1, s12, s21 = weyl.parse("1"), weyl.parse("1.2"), weyl.parse("2.1")
    assert weyl.bruhat_le(s1, s12)
    assert not weyl.bruhat_le(s12, s21)
    assert not weyl.bruhat_le(s21, s12)
    assert all(weyl.bruhat_le(weyl.identity, w) and weyl.bruhat_le(w, weyl.w0) for w in weyl.elements)


def test_longest_elements(a2: Workspace, g2: Workspace) -> None:
    weyl = a2.weyl_engine
    assert weyl.longest_element(()) == weyl.identity
    assert weyl.longest_element({0, 1}) == weyl.parse("1.2.1")
    assert weyl.longest_element({0, 1}).length == 3
    g2_weyl = g2.weyl_engine
    assert g2_weyl.w0.length == 6
    assert tuple(g2_weyl.w0.act_fundamental((1, 0))) == (-1, 0)
    assert tuple(g2_weyl.w0.act_fundamental((0, 1))) == (0, -1)


def test_d4_longest_length(open_workspace) -> None:
    assert open_workspace("D4").weyl_engine.w0.length == 12


@pytest.mark.parametrize(
    ("type_text", "expected"), [("A2", 1), ("A3", 2), ("A4", 2), ("B2", 2), ("C3", 3), ("G2", 2), ("D4", 4)]
)
def test_reflection_length_of_w0(open_workspace, type_text: str, expected: int) -> None:
    weyl = open_workspace(type_text).weyl_engine
    assert weyl.reflection_length(weyl.w0) == expected


def test_reflection_length_within_parabolic(a3: Workspace) -> None:
    weyl = a3.weyl_engine
    for nodes in ({0}, {0, 1}, {0, 2}, {1, 2}):
        longest = weyl.longest_element(nodes)
        assert weyl.reflection_length(longest, within=nodes) == weyl.reflection_length(longest)


def test_min_coset_reps(a2: Workspace) -> None:
    weyl = a2.weyl_engine
    assert len(weyl.min_coset_reps(())) == 6
    assert {str(w) for w in weyl.min_coset_reps({0})} == {"e", "2", "2.1"}
    assert weyl.min_coset_reps({0, 1}) == (weyl.identity,)


@given(st.integers(min_value=0, max_value=47), st.integers(min_value=0, max_value=47))
def test_product_length_identity(open_workspace, x_index: int, y_index: int) -> None:
    weyl = open_workspace("B3").weyl_engine
    x, y = weyl.elements[x_index], weyl.elements[y_index]
    assert (x * y).length == x.length - y.length + 2 * weyl.product_length_defect(x, y)


def test_inverse_and_action(b2: Workspace) -> None:
    weyl = b2.weyl_engine
    system = b2.roots_engine
    for w in weyl.elements:
        assert w * w.inverse == weyl.identity
        assert w.inverse.length == w.length
        assert all(w.act(w.inverse.act(r)) == r for r in range(2 * system.n_positive))


def test_signatures(open_workspace) -> None:
    d4 = open_workspace("D4").roots_engine
    assert signature(d4, {0, 2, 3}) == "A1^3"
    assert signature(d4, {0, 1, 2, 3}) == "D4"
    assert signature(d4, ()) == "∅"
    b3 = open_workspace("B3").roots_engine
    assert signature(b3, {1, 2}) == "B2"
    assert signature(b3, {0, 2}) == "A1^2"


def test_format_nodes() -> None:
    assert format_nodes({0, 2}) == "{1,3}"
    assert format_nodes(()) == "{}"
