"""
Logging configuration for the graph_covers package.
"""

import logging
from pathlib import Path
from datetime import datetime
from .constants import LOG_RETENTION_COUNT, LOG_FILE_PREFIX
from .utils import get_logs_destination_from_config


def cleanup_old_logs(log_dir: Path, keep_count: int = 10) -> None:
    """
    Clean up old log files, keeping only the most recent ones.

    Args:
        log_dir: Directory containing log files
        keep_count: Number of most recent log files to keep (default: 10)
    """
    cleanup_logger = logging.getLogger('graph_covers.cleanup')

    try:
        log_files = list(log_dir.glob(f"{LOG_FILE_PREFIX}*.log"))

        if len(log_files) <= keep_count:
            return

        # Newest first
        log_files.sort(key=lambda x: x.stat().st_mtime, reverse=True)

        deleted_count = 0
        for file_path in log_files[keep_count:]:
            try:
                file_path.unlink()
                deleted_count += 1
            except Exception as e:
                cleanup_logger.warning(f"Failed to delete old log file {file_path.name}: {e}")

        if deleted_count > 0:
            cleanup_logger.info(f"Cleaned up {deleted_count} old log files, keeping {keep_count} most recent")

    except Exception as e:
        cleanup_logger.error(f"Error during log cleanup: {e}")


def setup_logging(log_level=logging.INFO, log_dir: Path = None):
    """
    Configure logging for the command line tool.

    Creates a timestamped log file under '.graphcovers/logs' (or the configured
    destination) and a console handler that only shows warnings.

    Args:
        log_level: The logging level to use (default: logging.INFO)
        log_dir: Override for the log directory

    Returns:
        logging.Logger: the configured package logger
    """
    log_dir = log_dir or get_logs_destination_from_config()
    log_dir.mkdir(parents=True, exist_ok=True)

    cleanup_old_logs(log_dir, LOG_RETENTION_COUNT)

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    log_file = log_dir / f"{LOG_FILE_PREFIX}{timestamp}.log"

    logger = logging.getLogger('graph_covers')
    logger.setLevel(log_level)
    # Drop handlers left by an earlier setup
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    file_handler = logging.FileHandler(log_file, encoding='utf-8')
    file_handler.setLevel(log_level)
    file_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s'
    )
    file_handler.setFormatter(file_formatter)
    logger.addHandler(file_handler)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.WARNING)  # Only show warnings and above in console
    console_handler.setFormatter(logging.Formatter('%(levelname)s - %(message)s'))
    logger.addHandler(console_handler)

    logger.info("Logging system initialized")
    logger.info(f"Log file: {log_file}")

    return logger


# Create module-level loggers
core_logger = logging.getLogger('graph_covers.core')
cover_logger = logging.getLogger('graph_covers.covers')
product_logger = logging.getLogger('graph_covers.products')
coloring_logger = logging.getLogger('graph_covers.colorings')
factory_logger = logging.getLogger('graph_covers.factory')
stronger_logger = logging.getLogger('graph_covers.stronger')
cli_logger = logging.getLogger('graph_covers.cli')
