import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    def record(criterion, ok, seconds, budget, detail):
        verdict = "PASS" if ok and seconds < budget else "FAIL"
        ACCEPTANCE_LINES.append(f"[{verdict}] criterion {criterion:>3}: {detail} ({seconds:.2f}s, budget {budget:g}s)")
        return verdict == "PASS"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
