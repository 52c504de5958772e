import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cardtable import quarry


@pytest.fixture
def fixtures_dir():
    return Path(__file__).parent.parent / "fixtures"


@pytest.fixture
def quarry_project():
    return quarry.quarry_project()
