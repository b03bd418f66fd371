import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

# criterion number -> (title, list of outcomes, detail lines)
_RESULTS: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = marker.args
        entry = _RESULTS.setdefault(number, [title, [], []])
        entry[1].append(rep.outcome)
        entry[2].extend(v for k, v in item.user_properties if k == "detail")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, outcomes, details = _RESULTS[number]
        ok = outcomes and all(o == "passed" for o in outcomes)
        tr.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
        for d in details:
            tr.write_line(f"               {d}")
