import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(criterion): top-level acceptance criterion check")
    config.addinivalue_line("markers", "slow: takes more than a few seconds")


_ACCEPTANCE_RESULTS: dict[str, list[tuple[str, str]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    criterion = marker.args[0] if marker.args else item.name
    if report.passed:
        status, note = "PASS", ""
    elif report.skipped and hasattr(report, "wasxfail"):
        status, note = "XFAIL", str(report.wasxfail)
    elif report.skipped:
        status = "SKIP"
        note = report.longrepr[-1] if isinstance(report.longrepr, tuple) else ""
    else:
        status, note = "FAIL", ""
    _ACCEPTANCE_RESULTS.setdefault(criterion, []).append((status, str(note)))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for criterion in sorted(_ACCEPTANCE_RESULTS):
        outcomes = _ACCEPTANCE_RESULTS[criterion]
        statuses = [s for s, _ in outcomes]
        if "FAIL" in statuses:
            overall = "FAIL"
        elif statuses == ["XFAIL"] * len(statuses):
            overall = "XFAIL (documented spec discrepancy)"
        elif "SKIP" in statuses and "PASS" in statuses:
            ran = statuses.count("PASS")
            skipped = statuses.count("SKIP")
            overall = f"PASS ({ran} case(s) ran, {skipped} skipped for missing data)"
        elif statuses == ["SKIP"] * len(statuses):
            overall = "SKIP"
        else:
            overall = "PASS"
        line = f"{criterion}: {overall}"
        notes = sorted({n for s, n in outcomes if s == "SKIP" and n})
        terminalreporter.write_line(line)
        for note in notes:
            terminalreporter.write_line(f"    - {note}")
