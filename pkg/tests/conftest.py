import random
import shutil
import tempfile
from pathlib import Path
from unittest.mock import patch

import pytest

from graph_covers.core.mg_format import write_mg
from tests.unit.test_base import RANDOM_SEED


@pytest.fixture(scope="session")
def test_dir():
    """Create a temporary directory for test files."""
    temp_dir = tempfile.mkdtemp()
    yield temp_dir
    shutil.rmtree(temp_dir)


@pytest.fixture(scope="function")
def tmp_home():
    """Point Path.home() at an empty temporary directory."""
    home = tempfile.mkdtemp()
    with patch("pathlib.Path.home", return_value=Path(home)):
        yield Path(home)
    shutil.rmtree(home)


@pytest.fixture(scope="function")
def rng():
    """Seeded random generator for property tests."""
    return random.Random(RANDOM_SEED)


@pytest.fixture(scope="function")
def mg_file(test_dir):
    """Write a graph to a .mg file and return its path."""
    def write(name, graph):
        path = Path(test_dir) / f"{name}.mg"
        write_mg(path, graph)
        return str(path)
    return write
