import pytest

from reflexive_polytopes.catalog import named_polytope
from reflexive_polytopes.enumeration import build_atlas, enumerate_reflexive_polygons

ACCEPTANCE_RESULTS = []


@pytest.fixture
def square():
    return named_polytope("square")


@pytest.fixture
def triangle():
    return named_polytope("triangle")


@pytest.fixture
def hexagon():
    return named_polytope("hexagon")


@pytest.fixture
def cube():
    return named_polytope("cube")


@pytest.fixture(scope="session")
def reflexive_polygons():
    return enumerate_reflexive_polygons()


@pytest.fixture(scope="session")
def atlas(reflexive_polygons):
    return build_atlas(reflexive_polygons)


@pytest.fixture(scope="session")
def delzant_polygons(atlas):
    return [atlas.polygons[i] for i in atlas.delzant_subset]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
