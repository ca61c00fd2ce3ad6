from core.qbg.application.commands.verify import lemmas
from core.rootsys.domain.cartan import CartanType
from core.shared_kernel.units_of_work.workspace import Workspace


def test_lemmas_suite_a2(new_workspace) -> None:
    report = lemmas.Command(new_workspace("A2")).execute(lemmas.Payload())
    assert report.exhaustive
    assert [section.name for section in report.sections] == ["lemmas", "key-lemma"]
    assert report.exit_code == 0
    assert len(report.sections[1].rows) == 7


def test_lemmas_suite_over_budget(budget) -> None:
    workspace = Workspace(CartanType.parse("B3"), budget.model_copy(update={"max_group_size": 10}))
    report = lemmas.Command(workspace).execute(lemmas.Payload())
    assert report.exit_code == 3
    assert not report.exhaustive


def test_lemmas_suite_checks_every_pair_at_low_rank(new_workspace) -> None:
    report = lemmas.Command(new_workspace("B2")).execute(lemmas.Payload())
    rows = {row.lemma: row for row in report.sections[0].rows}
    assert report.exit_code == 0
    assert rows["wt-x-y"].checked == 64
    assert rows["wt-longer"].failures == 0
    assert rows["d-subtract"].failures == 0


def test_lemmas_suite_samples_above_rank_three(budget) -> None:
    workspace = Workspace(CartanType.parse("A4"), budget.model_copy(update={"sample_pairs": 400}))
    report = lemmas.Command(workspace).execute(lemmas.Payload(key_sources=5))
    rows = {row.lemma: row for row in report.sections[0].rows}
    assert not report.exhaustive
    assert rows["wt-x-y"].checked == 400
