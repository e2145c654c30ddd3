import re
from collections import OrderedDict

import pytest

_criteria = OrderedDict()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    match = re.match(r"test_c(\d+)_", item.name)
    if item.module.__name__.endswith("test_acceptance") and match:
        if report.when == "call" or (report.when == "setup" and report.failed):
            number = int(match.group(1))
            title = (item.function.__doc__ or item.name).strip().splitlines()[0]
            entry = _criteria.setdefault(number, {"title": title, "failed": []})
            if report.failed:
                entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"{number:>2}  {status}  {entry['title']}"
        if entry["failed"]:
            line += "  [" + ", ".join(entry["failed"]) + "]"
        terminalreporter.write_line(line)
