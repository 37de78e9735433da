import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from euclidiv.domain import GAUSS, ZZ, polynomials

settings.register_profile("default", deadline=None, max_examples=100,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F5 = polynomials(5)


def ints(lo=-10**9, hi=10**9):
    return st.integers(lo, hi).map(ZZ)


def gaussians(span=200):
    return st.tuples(st.integers(-span, span), st.integers(-span, span)).map(GAUSS)


def polys(tag=F5, max_deg=6):
    p = tag.characteristic
    return st.lists(st.integers(0, p - 1), max_size=max_deg + 1).map(tag)


def elements(kind):
    return {"z": ints(), "gauss": gaussians(), "poly": polys()}[kind]


@pytest.fixture(params=["z", "gauss", "poly"], scope="session")
def kind(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
