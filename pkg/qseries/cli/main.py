"""
qcli: command-line front end.

    qcli <subcommand> --config ring.yaml [--precision d] [--output json|text|dot] [args...]

Exit status: 0 on success, 2 when a computation or config error is raised,
1 for usage errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from typing import List, Optional, TextIO

from ..exceptions import ConfigError, QSeriesError
from ..services.run_journal import record_run
from ..services.tracing import get_tracer
from ..settings import journal_path, load_defaults
from ..tools.file_io import write_file
from .commands import CommandContext, registry, run_command
from .config import RingConfig, load_config, parse_config
from .render import render

logger = logging.getLogger("qseries.cli")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="ring configuration (YAML or JSON); '-' reads stdin")
    common.add_argument("--precision", type=int, default=None, help="truncation degree d")
    common.add_argument("--output", choices=("json", "text", "dot"), default=None)
    common.add_argument("--out-file", default=None, help="also write the rendered output here")
    common.add_argument("--journal", default=None, help="append a JSONL run record to this file")
    common.add_argument(
        "--log-level",
        default=os.getenv("QSERIES_LOG_LEVEL", "WARNING"),
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        type=str.upper,
    )

    parser = _Parser(prog="qcli", description="Quantum power series: center, spectrum and series arithmetic")
    sub = parser.add_subparsers(dest="command", metavar="<subcommand>")
    sub.required = True
    for name, cmd in registry().items():
        p = sub.add_parser(name, help=cmd.help, parents=[common])
        for flags, kwargs in cmd.arguments:
            p.add_argument(*flags, **kwargs)
    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger("qseries").setLevel(getattr(logging, level, logging.WARNING))


def _load(args: argparse.Namespace, stdin: TextIO) -> Optional[RingConfig]:
    if args.config is None:
        return None
    if args.config == "-":
        return parse_config(stdin.read())
    return load_config(args.config)


def main(argv: Optional[List[str]] = None, *, stdin: Optional[TextIO] = None,
         stdout: Optional[TextIO] = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    _configure_logging(args.log_level)

    cmd = registry()[args.command]
    started = time.perf_counter()
    status, n, precision = "ok", None, None
    tracer = get_tracer()
    try:
        with tracer.root_span(args.command, {"argv": list(argv) if argv is not None else sys.argv[1:]}):
            cfg = _load(args, stdin)
            if cfg is None and cmd.needs_config:
                raise ConfigError("--config is required")
            if cfg is not None:
                n = cfg.n
                precision = cfg.resolve_precision(args.precision)
            ctx = CommandContext(cfg, precision, stdin=stdin)
            result = run_command(args.command, ctx, args)
            text = render(result, args.output or load_defaults()["output"])
            tracer.add_event("result", {"command": args.command, "ok": result.ok})
        stdout.write(text)
        if args.out_file:
            logger.info(write_file(args.out_file, text))
        return 0
    except QSeriesError as exc:
        status = "error"
        print(f"[qcli] {args.command}: {exc}", file=sys.stderr)
        return 2
    except Exception:
        status = "crash"
        raise
    finally:
        journal = args.journal or journal_path()
        if journal:
            try:
                record_run(
                    journal,
                    args.command,
                    n=n,
                    precision=precision,
                    elapsed_ms=(time.perf_counter() - started) * 1000,
                    status=status,
                )
            except OSError as exc:
                logger.warning("journal write failed: %s", exc)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
