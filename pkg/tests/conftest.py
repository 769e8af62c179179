import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fullcolour.enumeration import enumerate_graphs  # noqa: E402


@pytest.fixture(scope="session")
def graphs_upto_7():
    return list(enumerate_graphs(7))


@pytest.fixture(scope="session")
def graphs_upto_8():
    return list(enumerate_graphs(8))


@pytest.fixture(scope="session")
def pd_upto_8():
    return list(enumerate_graphs(8, "point_determining"))
