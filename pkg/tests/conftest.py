import os

import pytest

# filled by test_acceptance; one entry per criterion
ACCEPTANCE_LINES: list[str] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("HYPERSTAR_ENABLE_K5") == "1":
        return
    skip = pytest.mark.skip(reason="k=5 run; set HYPERSTAR_ENABLE_K5=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
