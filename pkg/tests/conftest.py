import time

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, derandomize=True, max_examples=100)
settings.load_profile("default")

_criteria: dict[str, list] = {}
_SUITE_BUDGET = 300
_start = time.perf_counter()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "_criterion", None)
    if crit is not None:
        _criteria.setdefault(crit, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report._criterion = (marker.args[0], marker.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    # criterion 9 also bounds the whole run
    elapsed = time.perf_counter() - _start
    for key in _criteria:
        if key[0] == 9:
            _criteria[key].append(elapsed < _SUITE_BUDGET)
    terminalreporter.section("acceptance criteria")
    for (num, text), results in sorted(_criteria.items()):
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {num}: {text}")
    terminalreporter.write_line(f"suite runtime {elapsed:.1f}s (budget {_SUITE_BUDGET}s)")


def pytest_sessionfinish(session, exitstatus):
    if exitstatus == 0 and time.perf_counter() - _start >= _SUITE_BUDGET:
        session.exitstatus = 1
