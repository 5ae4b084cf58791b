#!/usr/bin/env python3
"""Command-line interface for fockcalc."""

import sys
import json
import logging
import argparse
from typing import Any, List, Optional

from fockcalc.algebra.boson import to_boson_single
from fockcalc.algebra.fock import FockVector
from fockcalc.algebra.series import LaurentSeries
from fockcalc.algebra.vertex import djkm_bosonic, djkm_series
from fockcalc.config import Config, LOG_LEVELS, OUTPUT_FORMATS, SUITE_SIZES
from fockcalc.errors import (
    ChargeMixed,
    ConfigError,
    DimensionMismatch,
    ExprParseError,
    InsufficientWindow,
    PartitionError,
    ShapeOutOfBox,
)
from fockcalc.expr import eval_expr, parse_expr, parse_seed, parse_window, parse_windows
from fockcalc.models import SuiteReport
from fockcalc.suites import SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_WINDOW = 3
EXIT_DIMENSION = 4

EXPR_HELP = """\
expression grammar:
  whitespace-separated primitives, applied right to left (the rightmost
  primitive acts on the seed first):
    sigma(+) sigma(-) sigma(bar+) sigma(bar-)   Schubert derivations in z
    gamma[(method)] gamma_star[(method)]         vertex operators in z
    r_op(+) r_op(-)                              R(z) and R(z)^-1
    giambelli(l1,l2,...)                         Δ_λ(σ₊)
    djkm(i,j) djkm_hat(i,j)                      gl_∞ action and its normal ordering
    zeta(k)                                      charge shift
    an integer                                   scaling
  example: fockcalc eval --expr "sigma(bar+) sigma(+)" --window 0:3
"""


class ColoredFormatter(logging.Formatter):
    """Logging formatter that adds color to console output."""

    # ANSI color codes
    COLORS = {
        'DEBUG': '\033[36m',      # Cyan
        'INFO': '\033[32m',       # Green
        'WARNING': '\033[33m',    # Yellow
        'ERROR': '\033[91m',      # Bright Red
        'CRITICAL': '\033[1;91m', # Bold Bright Red
        'RESET': '\033[0m',       # Reset
    }

    def format(self, record):
        # stdout carries results, so logs go to stderr and are colored only on a terminal
        if hasattr(sys.stderr, 'isatty') and sys.stderr.isatty():
            levelname = record.levelname
            if levelname in self.COLORS:
                record.levelname = f"{self.COLORS[levelname]}{levelname}{self.COLORS['RESET']}"
        return super().format(record)


def setup_logging(level: str = "WARNING", log_file: Optional[str] = None):
    """Configure logging with colored console output on stderr."""
    numeric_level = getattr(logging, level.upper(), None)
    if not isinstance(numeric_level, int):
        numeric_level = logging.WARNING

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(ColoredFormatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    ))
    handlers: List[logging.Handler] = [console_handler]

    # File handler without color
    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        ))
        handlers.append(file_handler)

    logging.basicConfig(level=numeric_level, handlers=handlers, force=True)


# -- rendering --------------------------------------------------------------

def _encode(value: Any) -> Any:
    if isinstance(value, LaurentSeries):
        return value.to_json(_encode)
    return value.to_json()


def _text_rows(value: Any, prefix: str = "") -> List[tuple]:
    if not isinstance(value, LaurentSeries):
        return [(prefix.strip(), str(value))]
    rows = []
    for e, v in value.items():
        rows.extend(_text_rows(v, f"{prefix} {value.var}^{e}"))
    return rows


def render(value: Any, fmt: str) -> str:
    """A vector or (nested) series as JSON or as aligned text."""
    if fmt == "json":
        return json.dumps(_encode(value), ensure_ascii=False)
    if not isinstance(value, LaurentSeries):
        return str(value)
    rows = _text_rows(value)
    header = f"window {value.var}:[{value.lo}, {value.hi}]"
    if not rows:
        return f"{header}\n0"
    width = max(len(label) for label, _ in rows)
    return "\n".join([header] + [f"{label.ljust(width)}  {text}" for label, text in rows])


def render_report(report: SuiteReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), ensure_ascii=False)
    lines = [f"{report.summary_line()}  ({report.name}, {report.size}, {report.elapsed:.1f}s)"]
    counts = report.by_suite()
    width = max((len(name) for name in counts), default=0)
    for name, (passed, total) in counts.items():
        lines.append(f"  {name.ljust(width)}  {passed}/{total}")
    failure = report.first_failure()
    if failure is not None:
        lines.append("first counterexample:")
        lines.append(json.dumps(failure.to_json(), ensure_ascii=False))
    return "\n".join(lines)


# -- commands ---------------------------------------------------------------

def _default_window(config: Config):
    return (-config.window_radius, config.window_radius)


def cmd_eval(args, config: Config) -> int:
    logger = logging.getLogger(__name__)
    expr = parse_expr(args.expr)
    seed = parse_seed(args.seed)
    window = parse_window(args.window) if args.window else _default_window(config)
    logger.info(f"Evaluating {expr.text!r} on {seed} over {window}")
    result = eval_expr(expr, seed, window)
    print(render(result, config.output_format))
    return EXIT_OK


def cmd_check(args, config: Config) -> int:
    report = run_suite(args.suite, config.suite_size, config.suite_workers, config.random_seed)
    print(render_report(report, config.output_format))
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_djkm_series(args, config: Config) -> int:
    logger = logging.getLogger(__name__)
    seed = parse_seed(args.seed)
    if args.window:
        windows = parse_windows(args.window)
        if len(windows) != 2:
            raise ExprParseError(f"djkm-series needs two windows ZLO:ZHI,WLO:WHI, got {args.window!r}")
        z_window, w_window = windows
    else:
        z_window = w_window = _default_window(config)
    f = FockVector({seed: 1})
    logger.info(f"Generating function on {seed} over z{z_window} w{w_window}")
    if args.bosonic:
        series = djkm_bosonic(to_boson_single(f, seed.charge), z_window, w_window)
    else:
        series = djkm_series(f, z_window, w_window)
    print(render(series, config.output_format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        type=str,
        default=None,
        help="Path to a dotenv-format configuration file",
    )
    common.add_argument(
        "--log-level",
        type=str,
        default=None,
        choices=list(LOG_LEVELS),
        help="Logging level (default from config, WARNING)",
    )
    common.add_argument(
        "--format",
        type=str,
        default=None,
        choices=list(OUTPUT_FORMATS),
        help="Output format (default from config, json)",
    )

    parser = argparse.ArgumentParser(
        prog="fockcalc",
        description="Exact Schubert derivations, boson-fermion correspondence and DJKM vertex operators",
        epilog=EXPR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser(
        "eval", parents=[common], help="Apply an operator expression to a seed basis vector",
        epilog=EXPR_HELP, formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_eval.add_argument("--expr", type=str, required=True, help="Operator expression")
    p_eval.add_argument(
        "--seed", type=str, default='{"charge": 0, "shape": []}',
        help='Seed basis vector as JSON, e.g. {"charge": 0, "shape": [2,1]}',
    )
    p_eval.add_argument("--window", type=str, default=None, help="z-window LO:HI, written --window=-2:2 when LO is negative")
    p_eval.set_defaults(handler=cmd_eval)

    p_check = sub.add_parser("check", parents=[common], help="Run an identity suite")
    p_check.add_argument("suite", choices=list(SUITE_NAMES) + ["all"], help="Suite to run")
    p_check.add_argument("--size", type=str, default=None, choices=list(SUITE_SIZES), help="Suite size")
    p_check.add_argument("--workers", type=int, default=None, help="Concurrent cases (1-32 recommended)")
    p_check.add_argument("--random-seed", type=int, default=None, help="Seed of the randomized cases")
    p_check.set_defaults(handler=cmd_check)

    p_djkm = sub.add_parser("djkm-series", parents=[common], help="Dump the DJKM generating function")
    p_djkm.add_argument(
        "--seed", type=str, default='{"charge": 0, "shape": []}',
        help="Seed basis vector as JSON",
    )
    p_djkm.add_argument("--window", type=str, default=None, help="Windows ZLO:ZHI,WLO:WHI, written --window=-2:2,-2:2 when ZLO is negative")
    p_djkm.add_argument("--bosonic", action="store_true", help="Evaluate on the Schur side")
    p_djkm.set_defaults(handler=cmd_djkm_series)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = Config.from_file(args.config).with_overrides(
            output_format=args.format,
            log_level=args.log_level,
            suite_size=getattr(args, "size", None),
            suite_workers=getattr(args, "workers", None),
            random_seed=getattr(args, "random_seed", None),
        )
    except ConfigError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(config.log_level, config.log_file)
    logger = logging.getLogger(__name__)

    try:
        logger.info(f"Running command {args.command}")
        return args.handler(args, config)

    except (ExprParseError, PartitionError, ConfigError) as e:
        logger.debug(f"Usage error: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    except InsufficientWindow as e:
        print(f"Error: insufficient window: {e}", file=sys.stderr)
        return EXIT_WINDOW

    except (DimensionMismatch, ChargeMixed, ShapeOutOfBox) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_DIMENSION

    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_FAILED

    except Exception as e:
        logger.error(f"Command failed: {e}", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
