import argparse
from collections.abc import Callable

from adapters.inbound.cli.config import RunConfig
from adapters.inbound.cli.renderers import render_dot, render_json, render_report, render_value
from core.dimension.application.commands.evaluate import dimension, product
from core.dimension.application.commands.verify import d_adm
from core.qbg.application.commands.verify import lemmas
from core.theorems.application.commands.verify import constructions, decompositions, min_distance
from generic.domain.exceptions import EntityFieldError
from generic.domain.schemas import SuiteReport
from query.qbg.handlers import distance, export, w0, weight

# Результат подкоманды: текст для stdout и код возврата.
type Output = tuple[str, int]


class ArgumentsError(EntityFieldError):
    entity = "Arguments"


def run_qbg(args: argparse.Namespace, config: RunConfig) -> Output:
    workspace = config.workspace()
    match args.action:
        case "dist":
            found = distance.Handler(workspace).execute(args.x, args.y)
            return render_value(found.distance, found, config), 0
        case "wt":
            found = weight.Handler(workspace).execute(args.x, args.y)
            return render_value(found.expression, found, config), 0
        case "wt-w0":
            found = w0.Handler(workspace).execute()
            return render_value(found.expression, found, config), 0
        case "export-dot":
            payload = export.Payload(lower=args.lower, upper=args.upper)
            if config.format == "json":
                raise ArgumentsError(
                    "export-dot выводит только DOT, для JSON используйте export-table", field="format", id="json"
                )
            return render_dot(export.Handler(workspace).dot(payload), config), 0
        case "export-table":
            payload = export.Payload(lower=args.lower, upper=args.upper)
            return render_json(export.Handler(workspace).table(payload), config), 0
    raise ValueError(f"Неизвестное действие qbg: {args.action}")


def _levels(args: argparse.Namespace, config: RunConfig) -> dict:
    return {"levels": args.levels, "all_levels": args.all_levels, "with_affine": config.with_affine}


_SUITES: dict[str, Callable[[argparse.Namespace, RunConfig], SuiteReport]] = {
    "min-distance": lambda args, config: min_distance.Command(config.workspace()).execute(
        min_distance.Payload(**_levels(args, config))
    ),
    "section4": lambda args, config: constructions.Command(config.workspace()).execute(
        constructions.Payload(**_levels(args, config))
    ),
    "section5": lambda args, config: decompositions.Command(config.workspace()).execute(
        decompositions.Payload(**_levels(args, config), deep=args.deep)
    ),
    "lemmas": lambda args, config: lemmas.Command(config.workspace()).execute(
        lemmas.Payload(seed=args.seed, key_sources=args.key_sources)
    ),
    "d-adm": lambda args, config: d_adm.Command(config.workspace()).execute(
        d_adm.Payload(
            depths=args.depths,
            levels=args.levels,
            all_levels=args.all_levels or not args.levels,
            with_affine=config.with_affine,
            extras=args.extras,
        )
    ),
}


def run_verify(args: argparse.Namespace, config: RunConfig) -> Output:
    report = _SUITES[args.suite](args, config)
    return render_report(report, config), report.exit_code


def _split(text: str | None, count: int) -> list[str | None]:
    """Значения флага по множителям произведения, разделённые ";"; без ";" значение общее."""
    if text is None or ";" not in text:
        return [text] * count
    parts = text.split(";")
    if len(parts) != count:
        raise ArgumentsError(f"Ожидается {count} значений через ';', получено {text!r}", field="factors", id=text)
    return parts


def _dimension_fields(args: argparse.Namespace, count: int) -> list[dict]:
    columns = {
        name: _split(getattr(args, name), count) for name in ("level", "mu", "nu", "slopes", "kappa", "defect")
    }
    return [
        {name: values[index] for name, values in columns.items()} | {"mu_coords": args.mu_coords}
        for index in range(count)
    ]


def run_dim(args: argparse.Namespace, config: RunConfig) -> Output:
    factor_types = config.factor_types
    fields = _dimension_fields(args, len(factor_types))
    if len(factor_types) == 1:
        result = dimension.Command(config.workspace()).execute(dimension.Payload(**fields[0]))
        return render_json(result, config), 0
    payload = product.Payload(
        factors=[
            product.FactorPayload(cartan_type=cartan_type, **factor)
            for cartan_type, factor in zip(factor_types, fields, strict=True)
        ]
    )
    result = product.Command(lambda cartan_type: config.workspace(cartan_type)).execute(payload)
    return render_json(result, config), 0
