import pytest
from hypothesis import HealthCheck, settings

from linkdiag.diagram import parse_diagram, parse_pd
from linkdiag.generate import FIGURE_EIGHT, torus2k

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

TREFOIL_PD = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"


@pytest.fixture
def trefoil():
    return torus2k(3)


@pytest.fixture
def trefoil_pd():
    return parse_pd(TREFOIL_PD, "trefoil")


@pytest.fixture
def figure8():
    return parse_diagram(FIGURE_EIGHT, "figure8")


@pytest.fixture
def unknot():
    return parse_pd("circle: 1", "unknot")
