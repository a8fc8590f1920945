import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chainmail.complex import from_facets  # noqa: E402


@pytest.fixture
def hollow_triangle():
    return from_facets({1, 2, 3}, [{1, 2}, {2, 3}, {1, 3}])


@pytest.fixture
def full_triangle():
    return from_facets({1, 2, 3}, [{1, 2, 3}])
