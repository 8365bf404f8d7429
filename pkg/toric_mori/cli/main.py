"""
Command-line entry point.

Exit codes: 0 success, 1 input or usage error, 2 mathematical or internal failure.
"""
import argparse
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv

from toric_mori.cli import commands
from toric_mori.config.loader import LOG_LEVELS, ConfigLoader
from toric_mori.errors import InputError, MathematicalError

logger = logging.getLogger(__name__)

EXIT_INPUT = 1


class UsageError(InputError):
    """Raised for command-line usage errors."""
    pass


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that raises instead of exiting on bad usage."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def ray_index(text: str) -> int:
    """Accept "r3" or "3"."""
    value = text[1:] if text.startswith("r") else text
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid ray {text!r}")


def ray_choices(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid ray choice list {text!r}")


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--config", help="configuration file (default: $TORIC_MORI_CONFIG or config.json)")
    common.add_argument("--assume-proper", action="store_true",
                        help="accept morphisms whose properness cannot be verified")
    common.add_argument("--out", help="output file (contract, flip) or directory (mmp)")

    parser = ArgumentParser(prog="toric-mori", description="Relative toric Mori theory engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a fan file")
    p.add_argument("fan")
    p.set_defaults(handler=commands.cmd_validate)

    p = sub.add_parser("info", parents=[common], help="describe a fan")
    p.add_argument("fan")
    p.set_defaults(handler=commands.cmd_info)

    p = sub.add_parser("mori", parents=[common], help="relative Mori cone of a morphism")
    p.add_argument("morphism")
    p.set_defaults(handler=commands.cmd_mori)

    p = sub.add_parser("contract", parents=[common], help="contract an extremal ray")
    p.add_argument("morphism")
    p.add_argument("--ray", type=int, required=True)
    p.set_defaults(handler=commands.cmd_contract)

    p = sub.add_parser("flip", parents=[common], help="flip a small extremal ray")
    p.add_argument("morphism")
    p.add_argument("--ray", type=int, required=True)
    p.set_defaults(handler=commands.cmd_flip)

    p = sub.add_parser("positivity", parents=[common], help="relative positivity queries")
    p.add_argument("morphism")
    p.add_argument("--divisor", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--check", choices=["nef", "ample", "free"])
    mode.add_argument("--twist-free", nargs="+", type=ray_index, metavar="RAY")
    mode.add_argument("--twist-ample", type=ray_index, metavar="RAY")
    mode.add_argument("--twist-bound", type=int, metavar="T")
    p.set_defaults(handler=commands.cmd_positivity)

    p = sub.add_parser("mmp", parents=[common], help="run the MMP along given ray choices")
    p.add_argument("morphism")
    p.add_argument("--ray-choice", type=ray_choices, required=True, help="comma-separated ray indices")
    p.add_argument("--interactive", choices=["false"], default="false", help="only non-interactive runs")
    p.set_defaults(handler=commands.cmd_mmp)

    return parser


def _configure_logging(level: str):
    logging.basicConfig(
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger("toric_mori").setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    load_dotenv()
    try:
        args = build_parser().parse_args(argv)
        config = ConfigLoader().load(args.config or os.environ.get("TORIC_MORI_CONFIG", "config.json"))
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    level = os.environ.get("TORIC_MORI_LOG_LEVEL", config.logging.level).upper()
    _configure_logging(level if level in LOG_LEVELS else config.logging.level)
    args.command_echo = argv

    try:
        report, code = args.handler(args, config)
    except (InputError, IndexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except MathematicalError as e:
        print(f"error: {e}", file=sys.stderr)
        return commands.EXIT_INVALID
    except Exception as e:
        logger.debug("unhandled error", exc_info=True)
        print(f"error: internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return commands.EXIT_INVALID

    print(report.to_json(config.output.json_indent) if args.json else report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
