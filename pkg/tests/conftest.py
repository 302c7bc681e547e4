import re

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    m = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.failed:
        ok = report.passed and _acceptance.get(key, True)
        _acceptance[key] = ok


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), ok in sorted(_acceptance.items()):
        terminalreporter.write_line(f"criterion {num} {name.replace('_', ' ')}: {'PASS' if ok else 'FAIL'}")
