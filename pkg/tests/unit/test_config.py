import json
import logging
import os
import time
import unittest
from pathlib import Path
from unittest.mock import patch

import pytest

from graph_covers.build_info import format_build_string, get_build_info, get_version
from graph_covers.constants import CONFIG_DIR_NAME, CONFIG_FILE_NAME, DEFAULT_BUDGET, LOGS_DIR_NAME
from graph_covers.logging_config import cleanup_old_logs, setup_logging
from graph_covers.utils import (
    default_config, get_config_file_path, get_default_budget_from_config, get_log_level_from_config,
    get_good_set_cap_from_config, get_logs_destination_from_config, initialize_user_config,
    set_default_budget_in_config,
    set_logs_destination_in_config,
)
from tests.unit.test_base import HomePatchedTestCase


@pytest.mark.functional
class TestUserConfig(HomePatchedTestCase):
    """Tests for the JSON config under the home directory."""

    def test_initialize_creates_defaults(self):
        """First run writes the default config and the logs folder."""
        initialize_user_config()
        config_file = Path(self.home_dir) / CONFIG_DIR_NAME / CONFIG_FILE_NAME
        self.assertTrue(config_file.exists())
        self.assertTrue((Path(self.home_dir) / CONFIG_DIR_NAME / LOGS_DIR_NAME).is_dir())
        with open(config_file, "r", encoding="utf-8") as f:
            self.assertEqual(json.load(f), default_config())

    def test_initialize_keeps_existing_file(self):
        """An existing config is never overwritten."""
        initialize_user_config()
        set_default_budget_in_config(24)
        initialize_user_config()
        self.assertEqual(get_default_budget_from_config(), 24)

    def test_budget(self):
        """The budget falls back to the default when missing or invalid."""
        self.assertEqual(get_default_budget_from_config(), DEFAULT_BUDGET)
        set_default_budget_in_config(12)
        self.assertEqual(get_default_budget_from_config(), 12)
        with self.assertRaises(ValueError):
            set_default_budget_in_config(0)
        with open(get_config_file_path(), "w", encoding="utf-8") as f:
            json.dump({"default_budget": "big"}, f)
        self.assertEqual(get_default_budget_from_config(), DEFAULT_BUDGET)

    def test_good_set_cap(self):
        """The good-set cap is read back and ignored when not positive."""
        initialize_user_config()
        self.assertEqual(get_good_set_cap_from_config(), 20)
        with open(get_config_file_path(), "w", encoding="utf-8") as f:
            json.dump({"good_set_vertex_cap": 8}, f)
        self.assertEqual(get_good_set_cap_from_config(), 8)
        with open(get_config_file_path(), "w", encoding="utf-8") as f:
            json.dump({"good_set_vertex_cap": -1}, f)
        self.assertEqual(get_good_set_cap_from_config(), 20)

    def test_logs_destination(self):
        """The logs destination can be moved."""
        default = Path(self.home_dir) / CONFIG_DIR_NAME / LOGS_DIR_NAME
        self.assertEqual(get_logs_destination_from_config(), default)
        target = os.path.join(self.home_dir, "elsewhere")
        set_logs_destination_in_config(target)
        self.assertEqual(get_logs_destination_from_config(), Path(target))

    def test_log_level(self):
        """Unknown level names fall back to INFO."""
        self.assertEqual(get_log_level_from_config(), logging.INFO)
        with open(get_config_file_path(), "w", encoding="utf-8") as f:
            json.dump({"log_level": "debug"}, f)
        self.assertEqual(get_log_level_from_config(), logging.DEBUG)
        with open(get_config_file_path(), "w", encoding="utf-8") as f:
            json.dump({"log_level": "chatty"}, f)
        self.assertEqual(get_log_level_from_config(), logging.INFO)

    def test_corrupt_config(self):
        """A config file that is not JSON reads as empty."""
        get_config_file_path().write_text("{not json", encoding="utf-8")
        self.assertEqual(get_default_budget_from_config(), DEFAULT_BUDGET)


@pytest.mark.functional
class TestLogging(HomePatchedTestCase):
    """Tests for log setup and retention."""

    def tearDown(self):
        """Clean up after each test."""
        logger = logging.getLogger('graph_covers')
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()
        super().tearDown()

    def test_setup_logging_writes_file(self):
        """A timestamped log file is created and handlers do not stack."""
        log_dir = Path(self.home_dir) / "logs"
        setup_logging(logging.DEBUG, log_dir)
        logger = setup_logging(logging.DEBUG, log_dir)
        self.assertEqual(len(logger.handlers), 2)
        files = list(log_dir.glob("graph_covers_*.log"))
        self.assertTrue(files)
        for handler in logger.handlers:
            handler.flush()
        self.assertIn("Logging system initialized", files[-1].read_text(encoding="utf-8"))

    def test_cleanup_old_logs(self):
        """Only the newest files are kept."""
        log_dir = Path(self.home_dir) / "logs"
        log_dir.mkdir()
        now = time.time()
        for i in range(5):
            path = log_dir / f"graph_covers_{i}.log"
            path.write_text("x")
            os.utime(path, (now - 100 + i, now - 100 + i))
        (log_dir / "other.txt").write_text("kept")
        cleanup_old_logs(log_dir, keep_count=2)
        remaining = sorted(p.name for p in log_dir.iterdir())
        self.assertEqual(remaining, ["graph_covers_3.log", "graph_covers_4.log", "other.txt"])


@pytest.mark.functional
class TestBuildInfo(unittest.TestCase):
    """Tests for version strings."""

    def test_without_git(self):
        """Outside a checkout only the version is printed."""
        with patch('graph_covers.build_info.get_git_info', return_value=(None, None, None)):
            self.assertEqual(format_build_string(), f"graph_covers {get_version()}")
            self.assertFalse(get_build_info()['is_git_repo'])

    def test_with_git(self):
        """Commit, date and a non-mainline branch are appended."""
        with patch('graph_covers.build_info.get_git_info',
                   return_value=("abc1234", "2025-01-02", "feature")):
            self.assertEqual(format_build_string(),
                             f"graph_covers {get_version()} (abc1234, 2025-01-02) [feature]")
        with patch('graph_covers.build_info.get_git_info',
                   return_value=("abc1234", None, "main")):
            self.assertEqual(format_build_string(), f"graph_covers {get_version()} (abc1234)")


if __name__ == '__main__':
    unittest.main()
