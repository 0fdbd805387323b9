"""Collects acceptance-criterion outcomes and prints one line per criterion.

A test tagged `@pytest.mark.criterion(n, "name")` feeds the summary block
at the end of the run; `record_property("criterion_detail", ...)` attaches
a short measurement note to the PASS/FAIL line.
"""

import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "criterion(num, name): acceptance criterion covered by this test")


def _failure_detail(rep) -> str:
    text = str(rep.longrepr)
    for line in text.splitlines():
        if line.startswith("E ") and "assert" not in line.split(":")[0]:
            return line[1:].strip().removeprefix("AssertionError:").strip()
    return text.splitlines()[-1][:200] if text else ""


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    num, name = marker.args
    entry = _CRITERIA.setdefault(num, {"name": name, "outcome": "PASS",
                                       "detail": ""})
    props = dict(rep.user_properties)
    if rep.failed:
        entry["outcome"] = "FAIL"
        entry["detail"] = props.get("criterion_detail") or _failure_detail(rep)
    elif rep.skipped:
        entry["outcome"] = "SKIP"
    elif entry["outcome"] == "PASS" and props.get("criterion_detail"):
        entry["detail"] = props["criterion_detail"]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        e = _CRITERIA[num]
        line = f"[criterion {num:02d}] {e['outcome']} {e['name']}"
        if e["detail"]:
            line += f" ({e['detail'][:180]})"
        terminalreporter.write_line(line)
