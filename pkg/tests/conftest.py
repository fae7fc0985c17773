import pytest

from lietower.periodic import assign_elements
from lietower.sopq import Metric, build_generators


@pytest.fixture(scope="session")
def gs42():
    return build_generators(Metric(4, 2))


@pytest.fixture(scope="session")
def gs44():
    return build_generators(Metric(4, 4))


@pytest.fixture(scope="session")
def elements():
    return assign_elements()
