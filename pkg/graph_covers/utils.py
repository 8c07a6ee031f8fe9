"""
Utility functions used throughout the graph_covers package.

Configuration lives in a JSON file under the user's home directory
(``~/.graphcovers/config.json``). Library operations never read it; only
the command line front end does, to pick defaults.
"""

import json
import logging
from pathlib import Path

from .constants import (
    CONFIG_DIR_NAME, LOGS_DIR_NAME, CONFIG_FILE_NAME,
    DEFAULT_BUDGET, GOOD_SET_VERTEX_CAP
)


def get_config_directory() -> Path:
    """Return the hidden config directory, creating it if needed."""
    config_dir = Path.home() / CONFIG_DIR_NAME
    config_dir.mkdir(parents=True, exist_ok=True)
    return config_dir


def get_logs_directory() -> Path:
    """
    Get the path to the logs directory in the user's home directory (hidden .graphcovers/logs folder).
    Returns:
        Path: Path object pointing to the logs directory
    """
    logs_dir = Path.home() / CONFIG_DIR_NAME / LOGS_DIR_NAME
    logs_dir.mkdir(parents=True, exist_ok=True)
    return logs_dir


def get_config_file_path() -> Path:
    """
    Get the path to the config file in the hidden .graphcovers directory.
    Returns:
        Path: Path object pointing to the config file
    """
    return get_config_directory() / CONFIG_FILE_NAME


def default_config() -> dict:
    """Default settings written on first run."""
    return {
        "logs_destination": str(Path.home() / CONFIG_DIR_NAME / LOGS_DIR_NAME),
        "default_budget": DEFAULT_BUDGET,
        "good_set_vertex_cap": GOOD_SET_VERTEX_CAP,
        "log_level": "INFO",
    }


def initialize_user_config() -> None:
    """
    Ensure the .graphcovers folder and config file exist in the user's home directory.
    If the config file does not exist, create it with default settings.
    """
    config_dir = Path.home() / CONFIG_DIR_NAME
    logs_dir = config_dir / LOGS_DIR_NAME
    config_dir.mkdir(parents=True, exist_ok=True)
    logs_dir.mkdir(parents=True, exist_ok=True)
    config_file = config_dir / CONFIG_FILE_NAME
    if not config_file.exists():
        with open(config_file, "w", encoding="utf-8") as f:
            json.dump(default_config(), f, indent=2)


def _read_config() -> dict:
    config_file = get_config_file_path()
    if not config_file.exists():
        return {}
    try:
        with open(config_file, "r", encoding="utf-8") as f:
            config = json.load(f)
        return config if isinstance(config, dict) else {}
    except Exception:
        return {}


def _write_config_value(key: str, value) -> None:
    config = _read_config()
    config[key] = value
    with open(get_config_file_path(), "w", encoding="utf-8") as f:
        json.dump(config, f, indent=2)


def get_logs_destination_from_config() -> Path:
    """
    Read the logs destination from the config file. If not set or config is missing,
    return the default logs directory.
    Returns:
        Path: Path to the logs destination
    """
    logs_dest = _read_config().get("logs_destination")
    if logs_dest:
        return Path(logs_dest)
    return Path.home() / CONFIG_DIR_NAME / LOGS_DIR_NAME


def set_logs_destination_in_config(new_path: str) -> None:
    """
    Update the logs destination in the config file.
    Args:
        new_path: The new logs destination path as a string
    """
    _write_config_value("logs_destination", new_path)


def get_default_budget_from_config() -> int:
    """
    Read the witness-search vertex budget. Falls back to DEFAULT_BUDGET when the
    value is missing or not a positive integer.
    """
    budget = _read_config().get("default_budget")
    if isinstance(budget, int) and not isinstance(budget, bool) and budget > 0:
        return budget
    return DEFAULT_BUDGET


def set_default_budget_in_config(budget: int) -> None:
    """
    Update the witness-search vertex budget in the config file.
    Args:
        budget: Positive integer vertex budget
    """
    if not isinstance(budget, int) or budget <= 0:
        raise ValueError(f"Budget must be a positive integer, got {budget!r}")
    _write_config_value("default_budget", budget)


def get_log_level_from_config() -> int:
    """Return the configured log level as a logging constant (INFO by default)."""
    name = _read_config().get("log_level", "INFO")
    level = logging.getLevelName(str(name).upper())
    return level if isinstance(level, int) else logging.INFO


def get_good_set_cap_from_config() -> int:
    """Largest graph ``goodsets`` will enumerate; GOOD_SET_VERTEX_CAP when unset."""
    cap = _read_config().get("good_set_vertex_cap")
    if isinstance(cap, int) and not isinstance(cap, bool) and cap > 0:
        return cap
    return GOOD_SET_VERTEX_CAP
