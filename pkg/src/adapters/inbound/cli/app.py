import argparse
import sys
from collections.abc import Sequence

import uvicorn
from loguru import logger
from pydantic import ValidationError

from adapters.config.settings import settings
from adapters.inbound.cli.config import RunConfig
from adapters.inbound.cli.exception_handlers import handle_domain_error, handle_validation_error
from adapters.inbound.cli.handlers import Output, run_dim, run_qbg, run_verify
from adapters.inbound.cli.parser import parse_args
from adapters.inbound.logging import setup_logging
from generic.domain.exceptions import DomainError
from generic.utils.log_levels import LogLevel

_COMMANDS = {"qbg": run_qbg, "verify": run_verify, "dim": run_dim}


def _serve(args: argparse.Namespace) -> int:
    api = settings.api
    uvicorn.run(
        "adapters.inbound.api.app.app:create_app",
        factory=True,
        host=args.host or api.host,
        port=args.port or api.port,
        reload=args.reload or api.reload,
        reload_dirs=["src"],
    )
    return 0


def _run(args: argparse.Namespace) -> Output:
    config = RunConfig.from_args(
        args.type_text,
        args.lattice,
        args.output,
        max_group_size=args.max_group_size,
        adm_cap=args.adm_cap,
        path_cap=args.path_cap,
        threads=args.threads,
        bfs_cache_size=args.bfs_cache_size,
        sample_pairs=args.sample_pairs,
        conjugacy_orbit_bound=args.conjugacy_orbit_bound,
    )
    logger.debug("Конфигурация запуска: {}", config.echo())
    return _COMMANDS[args.command](args, config)


def main(argv: Sequence[str] | None = None) -> int:
    """Точка входа CLI; возвращает код завершения (0, 1 - расхождение, 2 - ввод, 3 - бюджет)."""
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    level = LogLevel(args.log_level) if getattr(args, "log_level", None) else settings.log_level
    setup_logging(level)
    if args.command == "serve":
        return _serve(args)

    try:
        output, code = _run(args)
    except DomainError as exc:
        return handle_domain_error(exc)
    except ValidationError as exc:
        return handle_validation_error(exc)
    sys.stdout.write(output)
    return code
