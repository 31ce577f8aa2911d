# conftest.py
import os
import sys
from pathlib import Path

import pytest

# Ajusta o path para encontrar os módulos na pasta pai
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR
