import pytest

from sierdom import BACKENDS
from sierdom.corpus import corpus


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return request.param


@pytest.fixture(scope="session")
def graphs():
    return corpus()


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, status, detail in RESULTS:
        terminalreporter.write_line(f"{status:<12} {criterion}  {detail}")
