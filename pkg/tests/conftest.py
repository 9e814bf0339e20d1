import pytest

from qgk.rootsys import RootSystem

_CRITERIA: list[str] = []


@pytest.fixture(scope="session")
def systems():
    return {t: RootSystem.build(t) for t in ("A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4")}


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion."""
    def emit(number, title, ok, detail=""):
        line = f"[criterion {number:2d}] {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        _CRITERIA.append(line)
        print(line)
        return ok
    return emit


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA):
            terminalreporter.write_line(line)
