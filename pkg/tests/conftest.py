import pytest
from hypothesis import settings

from simpsep.sset import boundary, circle, collapsed_triangle, standard_simplex

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def delta1():
    return standard_simplex(1)


@pytest.fixture(scope="session")
def delta2():
    return standard_simplex(2)


@pytest.fixture(scope="session")
def bd2():
    return boundary(2)


@pytest.fixture(scope="session")
def small_complexes():
    return [standard_simplex(1), standard_simplex(2), boundary(2), circle(), collapsed_triangle()]


# one line per acceptance criterion, printed after the run
CRITERIA: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    def record(number: int, ok: bool, detail: str):
        CRITERIA[number] = (ok, detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        ok, detail = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
