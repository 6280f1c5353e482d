# app.py is the main entry point for the ducci command-line tool.
import logging
import sys

from src.ui.cli import configure_logging, main


def setup_logging():
    """Configure logging for the application"""
    configure_logging()


if __name__ == "__main__":
    setup_logging()
    logger = logging.getLogger(__name__)
    try:
        sys.exit(main(sys.argv[1:]))
    except KeyboardInterrupt:
        logger.warning("Interrupted; partial sweep rows already written are kept.")
        sys.exit(130)
