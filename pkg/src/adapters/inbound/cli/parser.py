import argparse
from collections.abc import Sequence

from generic.utils.log_levels import LogLevel


def positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"ожидается положительное целое, получено {text!r}")
    return value


def depth_range(text: str) -> list[int]:
    """"4..5" -> [4, 5]; "3" -> [3]; "3,5" -> [3, 5]."""
    try:
        if ".." in text:
            start, stop = text.split("..", 1)
            depths = list(range(int(start), int(stop) + 1))
        else:
            depths = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"не удалось разобрать диапазон глубин {text!r}") from exc
    if not depths or min(depths) <= 0:
        raise argparse.ArgumentTypeError(f"глубины должны быть положительными: {text!r}")
    return depths


def _common() -> argparse.ArgumentParser:
    """Флаги RunConfig, общие для всех подкоманд."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="type_text", required=True, help='Тип Картана: "A2", "C2aff", "A2xA1" для dim')
    common.add_argument("--lattice", choices=["adjoint", "sc"], default=None)
    common.add_argument("--format", dest="output", choices=["tsv", "json", "dot"], default=None)
    common.add_argument("--log-level", choices=[level.value for level in LogLevel], default=None)
    budget = common.add_argument_group("бюджеты")
    for flag in (
        "max-group-size",
        "adm-cap",
        "path-cap",
        "threads",
        "bfs-cache-size",
        "sample-pairs",
        "conjugacy-orbit-bound",
    ):
        budget.add_argument(f"--{flag}", type=positive_int, default=None)
    return common


def _levels(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--level", dest="levels", action="append", default=[], help='Уровень J, например "0,2"')
    parser.add_argument("--all-J", dest="all_levels", action="store_true", help="Все сферические J")


def _add_qbg(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    qbg = subparsers.add_parser("qbg", help="Квантовый граф Брюа")
    actions = qbg.add_subparsers(dest="action", required=True)
    for name, help_text in (("dist", "d(x, y)"), ("wt", "wt(x, y)")):
        sub = actions.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("x", help='Слово "1.2.1", "e" или "w0"')
        sub.add_argument("y")
    actions.add_parser("wt-w0", parents=[common], help="wt(w0, 1), d(w0, 1), l_R(w0)")
    for name, help_text in (("export-dot", "Граф в формате DOT"), ("export-table", "Таблица (d, wt) в JSON")):
        sub = actions.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--lower", default=None, help="Нижняя граница интервала Брюа")
        sub.add_argument("--upper", default=None, help="Верхняя граница интервала Брюа")


def _add_verify(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    verify = subparsers.add_parser("verify", help="Наборы проверок")
    suites = verify.add_subparsers(dest="suite", required=True)
    for name in ("min-distance", "section4", "section5"):
        _levels(suites.add_parser(name, parents=[common]))
    suites.choices["section5"].add_argument("--deep", action="store_true", help="Таблицы E7, E8")

    lemmas = suites.add_parser("lemmas", parents=[common])
    lemmas.add_argument("--seed", type=int, default=0)
    lemmas.add_argument("--key-sources", type=positive_int, default=200)

    d_adm = suites.add_parser("d-adm", parents=[common])
    _levels(d_adm)
    d_adm.add_argument("--mu-depth", dest="depths", type=depth_range, default=[4], help='Глубины d, mu = d rho^vee: "4..5"')
    d_adm.add_argument("--no-extras", dest="extras", action="store_false", help="Только сравнение d_Adm")


def _add_dim(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    dim = subparsers.add_parser("dim", parents=[common], help="Формула размерности dim X(mu, b)_J")
    dim.add_argument("--level", default="", help='Уровень J; для произведения - через ";"')
    dim.add_argument("--mu", required=True, help='Кохарактер mu: "3,3"; для произведения - через ";"')
    dim.add_argument("--mu-coords", choices=["coroot", "fundamental"], default="coroot")
    newton = dim.add_mutually_exclusive_group()
    newton.add_argument("--nu", default=None, help="Точка Ньютона nu(b)")
    newton.add_argument("--slopes", default=None, help="Наклоны GL_n (тип A)")
    dim.add_argument("--kappa", default=None, help='Класс Коттвица: "0" или представитель')
    dim.add_argument("--defect", default="0", help="def(b)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qbg-parahoric", description="Квантовый граф Брюа и размерности ADLV")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common()
    _add_qbg(subparsers, common)
    _add_verify(subparsers, common)
    _add_dim(subparsers, common)

    serve = subparsers.add_parser("serve", help="HTTP API (uvicorn)")
    serve.add_argument("--host", default=None)
    serve.add_argument("--port", type=int, default=None)
    serve.add_argument("--reload", action="store_true")
    return parser


def parse_args(argv: Sequence[str] | None) -> argparse.Namespace:
    return build_parser().parse_args(list(argv) if argv is not None else None)
