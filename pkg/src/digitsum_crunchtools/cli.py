"""Command-line interface: ``digitsum <eval|verify|tableau|sharpness|plot|serve>``.

Every subcommand calls one function of the tools package and renders its
dict. Exit codes: 0 success, 1 a sweep found counterexamples or a tableau
failed verification, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

from .config import get_config
from .errors import OutputError, UserError
from .sweep import THEOREMS
from .tools import (
    FUNCTIONS,
    evaluate,
    plot_samples,
    sharpness,
    tableau,
    verify,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    """Argument parser whose errors are a single stderr line."""

    def error(self, message: str) -> NoReturn:
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(parser: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
    parser.add_argument("--base", type=int, default=2, help="Base b >= 2 (default: 2)")
    parser.add_argument(
        "--format",
        choices=list(formats),
        default=default,
        help=f"Output format (default: {default})",
    )
    parser.add_argument("--out", help="Write output to this file instead of stdout")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Log level for stderr (default: DIGITSUM_LOG_LEVEL or WARNING)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="digitsum", description="Exact digit-sum arithmetic and inequality verification"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="Evaluate one function")
    p.add_argument("function", choices=FUNCTIONS)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--x", help="Rational argument, e.g. 3/8")
    p.add_argument("--depth", type=int, help="Series truncation depth")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--level", type=int, help="Grid level for convexity and lev")
    _common(p, ("text", "json"), "text")

    p = sub.add_parser("verify", help="Sweep one inequality over a range")
    p.add_argument("theorem", choices=list(THEOREMS))
    p.add_argument("--max-m", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--min-k", type=int, default=0)
    p.add_argument("--max-level", type=int)
    p.add_argument("--witness-cap", type=int)
    p.add_argument("--jobs", type=int)
    _common(p, ("json", "text"), "json")

    p = sub.add_parser("tableau", help="Build and verify the b x k tableau")
    p.add_argument("--k", type=int, required=True)
    _common(p, ("text", "json"), "text")

    p = sub.add_parser("sharpness", help="Sharpness ratios of the general bound")
    p.add_argument("--max-n", type=int, default=8)
    _common(p, ("text", "json"), "text")

    p = sub.add_parser("plot", help="Exact samples of h, omega or g")
    p.add_argument("function", choices=["h", "omega", "g"])
    p.add_argument("--level", type=int, required=True)
    _common(p, ("csv", "json"), "csv")

    p = sub.add_parser("serve", help="Run the MCP server")
    p.add_argument(
        "--transport",
        choices=["stdio", "sse", "streamable-http"],
        default="stdio",
        help="Transport protocol (default: stdio)",
    )
    p.add_argument(
        "--host",
        default="127.0.0.1",
        help="Host to bind to for HTTP transports (default: 127.0.0.1)",
    )
    p.add_argument(
        "--port",
        type=int,
        default=8000,
        help="Port to bind to for HTTP transports (default: 8000)",
    )
    p.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Log level for stderr",
    )
    return parser


def _configure_logging(level: str | None) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=level or get_config().log_level,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _json(result: dict[str, Any]) -> str:
    return json.dumps(result, indent=2)


def render_eval(result: dict[str, Any]) -> str:
    value = result["value"]
    if isinstance(value, bool):
        text = "true" if value else "false"
    elif isinstance(value, list):
        text = " ".join(str(d) for d in value)
    else:
        text = str(value)
    if "average_slack" in result:
        text += f" (average slack {result['average_slack']})"
    if not result["exact"]:
        text += f" +/- {result['error_bound']} (depth {result['depth']})"
    return text


def _inputs(values: list[int]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def render_report(report: dict[str, Any]) -> str:
    lines = [
        f"theorem: {report['theorem_id']}",
        f"range: {report['range']}",
        f"checked: {report['checked']}",
    ]
    minimum = report["min_slack"]
    if minimum is None:
        lines.append("min slack: none")
    else:
        line = f"min slack: {minimum['slack']} at {_inputs(minimum['inputs'])}"
        if minimum.get("average_slack") is not None:
            line += f", average slack {minimum['average_slack']}"
        lines.append(line)
    witnesses = report["equality_witnesses"]
    lines.append(f"equality witnesses: {report['witness_total']} (showing {len(witnesses)})")
    lines.extend("  " + _inputs(w) for w in witnesses)
    lines.append(f"counterexamples: {len(report['counterexamples'])}")
    lines.extend(
        f"  {_inputs(c['inputs'])} slack {c['slack']}" for c in report["counterexamples"]
    )
    lines.append("PASSED" if report["passed"] else "FAILED")
    return "\n".join(lines)


def render_tableau(result: dict[str, Any]) -> str:
    text: str = result["text"]
    violations = result["report"]["violations"]
    if violations:
        text += "\n" + "\n".join(
            f"violation ({v['row']}, {v['column']}) {v['rule']}: {v['detail']}" for v in violations
        )
    return text


def render_sharpness(result: dict[str, Any]) -> str:
    lines = [f"base {result['base']}, limit {result['limit']}", "n ratio closed_form deficit"]
    lines.extend(
        f"{row['n']} {row['ratio']} {row['closed_form']} {row['deficit']}" for row in result["rows"]
    )
    return "\n".join(lines)


def render_csv(result: dict[str, Any]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(result["header"])
    writer.writerows(result["rows"])
    return buffer.getvalue().rstrip("\n")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
        return
    try:
        Path(out).write_text(text + "\n", encoding="utf-8")
    except OSError as e:
        raise OutputError(out) from e


def _dispatch(args: argparse.Namespace) -> int:
    status = EXIT_OK
    match args.command:
        case "eval":
            result = evaluate(
                args.function,
                args.base,
                args.n,
                args.m,
                args.x,
                args.depth,
                k=args.k,
                l=args.l,
                level=args.level,
            )
            text = render_eval(result) if args.format == "text" else _json(result)
        case "verify":
            result = verify(
                args.theorem,
                base=args.base,
                max_m=args.max_m,
                max_n=args.max_n,
                max_k=args.max_k,
                min_k=args.min_k,
                max_level=args.max_level,
                witness_cap=args.witness_cap,
                jobs=args.jobs,
            )
            text = render_report(result) if args.format == "text" else _json(result)
            status = EXIT_OK if result["passed"] else EXIT_FAILED
        case "tableau":
            result = tableau(args.base, args.k)
            text = render_tableau(result) if args.format == "text" else _json(result)
            status = EXIT_OK if result["passed"] else EXIT_FAILED
        case "sharpness":
            result = sharpness(args.base, args.max_n)
            text = render_sharpness(result) if args.format == "text" else _json(result)
        case "plot":
            result = plot_samples(args.function, args.base, args.level)
            text = render_csv(result) if args.format == "csv" else _json(result)
        case "serve":
            from .server import mcp

            if args.transport == "stdio":
                mcp.run()
            else:
                mcp.run(transport=args.transport, host=args.host, port=args.port)
            return EXIT_OK
        case _:
            raise UserError(f"Unknown command: {args.command}")
    _emit(text, args.out)
    return status


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run one subcommand, and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        _configure_logging(args.log_level)
        return _dispatch(args)
    except UserError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
