import orjson
import pytest

from adapters.inbound.cli.app import main
from adapters.inbound.cli.parser import depth_range


def _run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _json(out: str) -> dict:
    return orjson.loads(out)


def test_distance_tsv_header(capsys) -> None:
    code, out, _ = _run(capsys, "qbg", "dist", "w0", "e", "--type", "A2")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "# schema: 1"
    assert lines[1].startswith("# config: type=A2 lattice=adjoint format=tsv")
    assert "max_group_size=" in lines[1]
    assert "threads=" not in lines[1]
    assert "bfs_cache_size=" not in lines[1]
    assert lines[-1] == "1"


def test_weight_of_longest_element_json(capsys) -> None:
    code, out, _ = _run(capsys, "qbg", "wt-w0", "--type", "A4", "--format", "json")
    document = _json(out)
    assert code == 0
    assert document["schema"] == 1
    assert document["config"]["type"] == "A4"
    result = document["result"]
    assert result["weight"] == [1, 2, 2, 1]
    assert result["expression"] == "ϖ2∨+ϖ3∨"
    assert result["distance"] == 2
    assert result["reflectionLength"] == 2


@pytest.mark.parametrize(
    ("cartan_type", "x", "y", "expected"),
    [("A2", "e", "1", "0"), ("A4", "w0", "e", "ϖ2∨+ϖ3∨"), ("A2", "w0", "e", "ϖ1∨+ϖ2∨")],
)
def test_weight_tsv(capsys, cartan_type: str, x: str, y: str, expected: str) -> None:
    code, out, _ = _run(capsys, "qbg", "wt", x, y, "--type", cartan_type)
    assert code == 0
    assert out.splitlines()[-1] == expected


def test_distance_upwards(capsys) -> None:
    _, out, _ = _run(capsys, "qbg", "dist", "--type", "A2", "e", "w0")
    assert out.splitlines()[-1] == "3"


def test_export_dot(capsys) -> None:
    code, out, _ = _run(capsys, "qbg", "export-dot", "--type", "A1")
    assert code == 0
    assert "digraph" in out


def test_export_dot_rejects_json(capsys) -> None:
    code, out, err = _run(capsys, "qbg", "export-dot", "--type", "A2", "--format", "json")
    assert code == 2
    assert out == ""
    assert "ArgumentsError" in err


def test_export_table_interval(capsys) -> None:
    code, out, _ = _run(capsys, "qbg", "export-table", "--type", "A2", "--lower", "1", "--upper", "1.2")
    result = _json(out)["result"]
    assert code == 0
    assert result["vertices"] == ["1", "1.2"]
    assert len(result["pairs"]) == 4


def test_verify_min_distance_tsv(capsys) -> None:
    code, out, _ = _run(capsys, "verify", "min-distance", "--type", "A2", "--all-J")
    lines = out.splitlines()
    assert code == 0
    assert "# suite: min-distance exhaustive=true" in lines
    assert "# section: min-distance" in lines
    header = lines[lines.index("# section: min-distance") + 1]
    assert header.split("\t") == ["level", "quotient_size", "min", "rhs", "match", "argmin", "status", "note"]


def test_verify_affine_type_takes_affine_levels(capsys) -> None:
    code, out, _ = _run(capsys, "verify", "min-distance", "--type", "A2aff", "--all-J", "--format", "json")
    rows = _json(out)["result"]["sections"][0]["rows"]
    assert code == 0
    assert len(rows) == 7


def test_verify_d_adm_over_budget(capsys) -> None:
    code, out, _ = _run(
        capsys, "verify", "d-adm", "--type", "A2", "--level", "1", "--mu-depth", "4", "--adm-cap", "10"
    )
    assert code == 3
    assert "budget_exceeded" in out
    assert "adm_cap=10" in out.splitlines()[1]


def test_dim_json(capsys) -> None:
    code, out, _ = _run(capsys, "dim", "--type", "A2", "--mu", "3,3", "--format", "json")
    result = _json(out)["result"]
    assert code == 0
    assert result["value"] == "7"
    assert result["case"] == "i"
    assert result["inputsEcho"]["level"] == "{}"


def test_dim_product(capsys) -> None:
    code, out, _ = _run(capsys, "dim", "--type", "A2xA2", "--mu", "3,3", "--level", ";1,2")
    result = _json(out)["result"]
    assert code == 0
    assert result["value"] == "13"
    assert [factor["value"] for factor in result["factors"]] == ["7", "6"]


def test_dim_product_value_count_mismatch(capsys) -> None:
    code, _, err = _run(capsys, "dim", "--type", "A2xA1", "--mu", "1,1;1;1")
    assert code == 2
    assert "ArgumentsError" in err


def test_dim_not_acceptable(capsys) -> None:
    code, _, err = _run(capsys, "dim", "--type", "A2", "--mu", "1,1", "--nu", "2,2")
    assert code == 2
    assert "NotNeutrallyAcceptableError" in err
    assert "κ([b])=μ^♮, ν([b])≤μ" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("qbg", "dist", "e", "e"),
        ("dim", "--type", "A2", "--mu", "1,1", "--nu", "0,0", "--slopes", "0,0,0"),
        ("verify", "d-adm", "--type", "A2", "--mu-depth", "0"),
    ],
)
def test_argument_errors(capsys, argv: tuple[str, ...]) -> None:
    code, _, _ = _run(capsys, *argv)
    assert code == 2


def test_unknown_cartan_type(capsys) -> None:
    code, _, err = _run(capsys, "qbg", "wt-w0", "--type", "Q7")
    assert code == 2
    assert "CartanTypeError" in err


def test_group_too_large(capsys) -> None:
    code, _, err = _run(capsys, "qbg", "dist", "e", "w0", "--type", "E7")
    assert code == 3
    assert "BudgetExceededError" in err


@pytest.mark.parametrize(
    ("text", "expected"),
    [("4..6", [4, 5, 6]), ("3", [3]), ("3,5", [3, 5])],
)
def test_depth_range(text: str, expected: list[int]) -> None:
    assert depth_range(text) == expected
