"""Command-line entry point: ``fibwords gen|decompose|verify|stats``."""

import sys
from typing import List, Optional

from pydantic import ValidationError

from fibwords.cli.commands import COMMANDS, EXIT_USAGE
from fibwords.cli.parser import build_parser
from fibwords.exceptions import FibWordsError
from fibwords.schemas.cli import CliConfig
from fibwords.utils.logging import setup_logging


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit status.

    Library errors and invalid flag combinations print a one-line message to
    stderr and return 2; argparse usage errors exit with 2 on their own.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = CliConfig.from_namespace(args)
    except ValidationError as exc:
        messages = "; ".join(error["msg"] for error in exc.errors())
        print(f"{parser.prog} {args.command}: error: {messages}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(config.log_level)
    try:
        return COMMANDS[config.command](config)
    except FibWordsError as exc:
        print(f"{parser.prog} {config.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


__all__ = ["main"]
