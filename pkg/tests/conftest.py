"""Shared pytest plumbing for the suite."""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo one verdict line per end-to-end check after the test run."""
    module = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance"
    )
    verdicts = getattr(module, "VERDICTS", None) if module else None
    if verdicts:
        terminalreporter.section("end-to-end checks")
        for line in verdicts:
            terminalreporter.write_line(line)
