import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_acceptance = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    if "test_acceptance.py" in report.nodeid and name.startswith("test_criterion_"):
        number = int(name.split("_")[2])
        if report.failed:
            _acceptance[number] = "FAIL"
        elif report.when == "call":
            _acceptance.setdefault(number, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        terminalreporter.write_line(f"criterion {number}: {_acceptance[number]}  {CRITERIA[number]}")
