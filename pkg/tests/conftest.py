import pytest

from helly import _backend

ACCEPTANCE_LINES = []


@pytest.fixture(params=_backend.available())
def backend(request):
    """Run the test once per importable kernel backend."""
    before = _backend.kernels
    kern = _backend.use(request.param)
    yield kern
    _backend.kernels = before


@pytest.fixture
def report():
    def add(line):
        ACCEPTANCE_LINES.append(line)
        print(line)

    return add


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
