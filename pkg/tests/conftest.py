import pytest

ACCEPTANCE_LINES = {}


def record_acceptance(number: int, passed: bool, seconds: float, note: str = "") -> None:
    ACCEPTANCE_LINES[number] = f"acceptance {number:>2}: {'PASS' if passed else 'FAIL'} ({seconds:.2f} s){' ' + note if note else ''}"


@pytest.fixture
def acceptance():
    return record_acceptance


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
