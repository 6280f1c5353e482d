# src/ui/cli.py
import argparse
import asyncio
import logging
import sys
from typing import List, Optional, TextIO

from pydantic import ValidationError

from src.core.config import LOGGING_FORMAT, LOGGING_LEVEL
from src.core.dispatcher import CommandDispatcher
from src.core.errors import DucciError, TupleParseError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


def configure_logging(level: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """Diagnostics go to stderr so stdout stays machine-parseable."""
    resolved = getattr(logging, level.upper(), LOGGING_LEVEL) if level else LOGGING_LEVEL
    logging.basicConfig(level=resolved, format=LOGGING_FORMAT, stream=stream or sys.stderr, force=True)


def main(argv: Optional[List[str]] = None, dispatcher: Optional[CommandDispatcher] = None) -> int:
    """Parses argv, runs one subcommand and returns the process exit status."""
    dispatcher = dispatcher or CommandDispatcher()
    parser = dispatcher.build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse has already printed usage to stderr
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE_ERROR

    if args.log_level:
        configure_logging(args.log_level)

    try:
        output = asyncio.run(dispatcher.dispatch(args))
    except TupleParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except (argparse.ArgumentTypeError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except DucciError as e:
        logger.info(f"'{args.command}' stopped with {type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except ValueError as e:
        # an out-of-range argument the parser let through
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR

    for line in output.lines:
        print(line)
    return output.status
