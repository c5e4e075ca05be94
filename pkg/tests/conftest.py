import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""

    def report(label, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] {label}" + (f" ({detail})" if detail else "")
        _acceptance_lines.append(line)
        print(line)
        return passed

    return report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
