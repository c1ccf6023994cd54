import pytest


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line per acceptance criterion for the summary."""

    def record(name: str, ok: bool, detail: str = ""):
        request.config._acceptance_lines.append((name, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, ok, detail in lines:
            status = "PASS" if ok else "FAIL"
            suffix = f" ({detail})" if detail else ""
            terminalreporter.write_line(f"{name}: {status}{suffix}")
