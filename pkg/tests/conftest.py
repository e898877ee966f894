import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cdlattice.group_core import dicyclic  # noqa: E402
from cdlattice.verifier import build_catalog  # noqa: E402


@pytest.fixture(scope="session")
def catalog():
    return build_catalog(15, range(3, 7))


@pytest.fixture(scope="session")
def q8():
    return dicyclic(2)
