import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "seqlab", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("seqlab")


_ACCEPTANCE_KEY = "seqlab_acceptance"


def pytest_configure(config):
    setattr(config, _ACCEPTANCE_KEY, {})


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, _ACCEPTANCE_KEY, {})
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(lines):
        terminalreporter.write_line(lines[number])


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    store = getattr(request.config, _ACCEPTANCE_KEY)

    def record(number, ok, detail):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        store[number] = line
        print(line)
        assert ok, line

    return record
