# main.py
import sys

from graph_covers.cli import run
from graph_covers.logging_config import setup_logging
from graph_covers.utils import get_log_level_from_config, initialize_user_config


def main(argv=None) -> int:
    # Initialize user config and folders
    initialize_user_config()
    # Initialize logging
    logger = setup_logging(get_log_level_from_config())
    logger.info("Starting graph_covers command line tool")

    try:
        return run(argv)
    except Exception:
        logger.exception("Unhandled exception while running command")
        raise
    finally:
        logger.info("graph_covers shutting down")


if __name__ == "__main__":
    sys.exit(main())
