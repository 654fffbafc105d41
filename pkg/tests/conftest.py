import hypothesis.strategies as st
import pytest
from hypothesis import settings

from codegraph import GeneratingCode

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def codes(draw, max_k=5, max_exp=4):
    k = draw(st.integers(1, max_k))
    pairs = draw(st.lists(st.tuples(st.integers(1, max_exp), st.integers(1, max_exp)), min_size=k, max_size=k))
    return GeneratingCode(tuple(pairs))


def small_codes(max_n):
    return codes(max_k=max_n // 2, max_exp=max_n - 1).filter(lambda c: c.n <= max_n)


@pytest.fixture
def worked_example():
    return GeneratingCode(((1, 2), (3, 1), (2, 2), (3, 4), (1, 1), (3, 4)))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
