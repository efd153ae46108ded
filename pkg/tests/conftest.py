import re

_results = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
    if m and (report.when == "call" or report.outcome != "passed"):
        key = int(m.group(1))
        if report.when == "call" or key not in _results:
            _results[key] = (m.group(2), "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results):
        name, status = _results[key]
        terminalreporter.write_line(f"criterion {key}: {status}  {name.replace('_', ' ')}")
