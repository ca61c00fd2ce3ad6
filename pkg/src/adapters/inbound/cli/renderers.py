from typing import Any

import orjson
from pydantic import BaseModel

from adapters.inbound.cli.config import SCHEMA_VERSION, RunConfig
from generic.domain.schemas import SuiteReport


def _cell(value: Any) -> str:
    """Ячейка TSV: пустая для None, true/false для bool, списки через ";"."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ";".join(_cell(item) for item in value)
    return str(value)


def render_report_tsv(report: SuiteReport, config: RunConfig) -> str:
    lines = [*config.header(), f"# suite: {report.suite} exhaustive={_cell(report.exhaustive)}"]
    for section in report.sections:
        lines.append(f"# section: {section.name}")
        if not section.rows:
            continue
        columns = type(section.rows[0]).columns()
        lines.append("\t".join(columns))
        for row in section.rows:
            dumped = row.model_dump(mode="json")
            lines.append("\t".join(_cell(dumped[column]) for column in columns))
    return "\n".join(lines) + "\n"


def render_json(result: BaseModel | dict[str, Any], config: RunConfig) -> str:
    """JSON с версией схемы и эхом конфигурации; все числа точные."""
    body = result.model_dump(mode="json", by_alias=True) if isinstance(result, BaseModel) else result
    document = {"schema": SCHEMA_VERSION, "config": config.echo(), "result": body}
    return orjson.dumps(document, option=orjson.OPT_INDENT_2).decode() + "\n"


def render_report(report: SuiteReport, config: RunConfig) -> str:
    if config.format == "json":
        return render_json(report, config)
    return render_report_tsv(report, config)


def render_value(value: Any, result: BaseModel, config: RunConfig) -> str:
    """Одиночный результат: в TSV - значение после заголовка, иначе полный JSON."""
    if config.format == "json":
        return render_json(result, config)
    return "\n".join([*config.header(), _cell(value)]) + "\n"


def render_dot(dot: str, config: RunConfig) -> str:
    return "\n".join([*config.header(), dot.rstrip("\n")]) + "\n"
