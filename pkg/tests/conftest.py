import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_acceptance: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_ac"):
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[name] = (report.outcome, report.head_line or name)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        outcome, _ = _acceptance[name]
        ac = name.split("_")[1].upper()  # "ac01" -> "AC01"
        label = " ".join(name.split("_")[2:])
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status} AC{int(ac[2:])}: {label}")
