import pytest

from core.qbg.domain.lemmas import (
    LemmaCheck,
    MAX_FAILURES,
    check_length_subtraction,
    check_longest_element,
    run_all,
    vertex_pairs,
)


def test_lemma_check_keeps_few_examples() -> None:
    check = LemmaCheck("demo")
    for k in range(MAX_FAILURES + 3):
        check.record(False, str(k))
    check.record(True, "ok")
    assert check.checked == MAX_FAILURES + 4
    assert check.failure_count == MAX_FAILURES + 3
    assert len(check.failures) == MAX_FAILURES
    assert not check.ok


def test_vertex_pairs_complete(a2) -> None:
    pairs, complete = vertex_pairs(a2.qbg, 36)
    assert complete
    assert len(pairs) == 36


def test_vertex_pairs_sample_is_deterministic(a3) -> None:
    first, complete = vertex_pairs(a3.qbg, 100, seed=7)
    second, _ = vertex_pairs(a3.qbg, 100, seed=7)
    assert not complete
    assert first == second
    assert first == sorted(first, key=lambda pair: pair[0])


@pytest.mark.parametrize("type_text", ["A2", "B2", "G2", "A3"])
def test_run_all_holds(open_workspace, type_text: str) -> None:
    qbg = open_workspace(type_text).qbg
    order = len(qbg.weyl.elements)
    pairs, _ = vertex_pairs(qbg, order * order)
    checks = {check.name: check for check in run_all(qbg, pairs)}
    assert [name for name, check in checks.items() if not check.ok] == []
    assert all(check.checked for check in checks.values())
    assert checks["wt-x-y"].checked == order * order
    assert checks["wt-d"].checked == order * order


@pytest.mark.parametrize(
    ("type_text", "word", "distance", "reflection_length"),
    [("B2", "1.2.1", 3, 1), ("A3", "2.1.3.2", 4, 2)],
)
def test_length_subtraction_fails_for_arbitrary_y(
    open_workspace, type_text: str, word: str, distance: int, reflection_length: int
) -> None:
    qbg = open_workspace(type_text).qbg
    weyl = qbg.weyl
    x = y = weyl.parse(word)
    assert (x * y).length == x.length - y.length
    assert qbg.distance(x, x * y) == distance
    assert weyl.reflection_length(y) == reflection_length


def test_length_subtraction_on_longest_parabolics(b2) -> None:
    x = b2.qbg.weyl.parse("1.2.1")
    check = check_length_subtraction(b2.qbg, [b2.qbg.index(x)])
    # у 1.2.1 правый спуск только s1
    assert check.checked == 1
    assert check.ok


def test_length_subtraction_covers_w0(a2) -> None:
    qbg = a2.qbg
    check = check_length_subtraction(qbg, [qbg.index(qbg.weyl.w0)])
    # у w0 спуски по всем узлам: I = {1}, {2}, {1,2}
    assert check.checked == 3
    assert check.ok


def test_longest_element_check_d4(open_workspace) -> None:
    assert check_longest_element(open_workspace("D4").qbg).ok
