import pytest

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance():
    """Records one pass/fail line per acceptance criterion, shown in the
    terminal summary, then enforces the verdict."""
    def record(number: int, name: str, ok: bool, detail: str) -> None:
        verdict = "PASS" if ok else "FAIL"
        _ACCEPTANCE_LINES.append(f"criterion {number} {name}: {verdict} ({detail})")
        assert ok, f"criterion {number} {name}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
