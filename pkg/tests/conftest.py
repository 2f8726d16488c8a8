import pytest
from hypothesis import settings

from wbcklab.fixtures import diamond, heyting_diamond, pentagon

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def m2():
    return diamond()


@pytest.fixture
def n5():
    return pentagon()


@pytest.fixture
def m2_heyting():
    return heyting_diamond()


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
