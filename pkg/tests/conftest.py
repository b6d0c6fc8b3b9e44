"""Shared pytest plumbing.

The acceptance suite (test_acceptance.py) defines test_criterion_1 .. _9; this
plugin prints one PASS/FAIL line per criterion in the terminal summary so the
gate is readable at a glance.
"""

import re

_PATTERN = re.compile(r"test_criterion_(\d+)")
_RESULTS: dict[int, str] = {}
_TITLES: dict[int, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = _PATTERN.match(item.name)
        if m and item.function.__doc__:
            _TITLES[int(m.group(1))] = item.function.__doc__.strip().splitlines()[0]


def pytest_runtest_logreport(report):
    m = _PATTERN.match(report.nodeid.rsplit("::", 1)[-1])
    if not m:
        return
    number = int(m.group(1))
    if report.when == "call" or report.outcome == "failed":
        # setup/teardown failures count as FAIL; a later phase never
        # overwrites an earlier failure
        if _RESULTS.get(number) != "failed":
            _RESULTS[number] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_RESULTS):
        word = "PASS" if _RESULTS[number] == "passed" else "FAIL"
        title = _TITLES.get(number, "")
        terminalreporter.write_line(f"ACCEPTANCE {number}: {word} - {title}")
