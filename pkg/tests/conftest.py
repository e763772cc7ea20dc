import pytest

from pg552 import construction as con
from pg552 import incidence as inc
from pg552 import symmetry as sym


@pytest.fixture(scope="session")
def vls():
    return con.build_vls()


@pytest.fixture(scope="session")
def new():
    return con.build_new()


@pytest.fixture(scope="session")
def point_graph_vls(vls):
    return inc.point_graph(vls)


@pytest.fixture(scope="session")
def point_graph_new(new):
    return inc.point_graph(new)


@pytest.fixture(scope="session")
def line_graph_vls(vls):
    return inc.line_graph(vls)


@pytest.fixture(scope="session")
def line_graph_new(new):
    return inc.line_graph(new)


@pytest.fixture(scope="session")
def aut_vls(vls):
    return sym.aut_incidence(vls)


@pytest.fixture(scope="session")
def aut_new(new):
    return sym.aut_incidence(new)
