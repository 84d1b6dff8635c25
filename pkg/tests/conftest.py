import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): acceptance criterion, reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label = marker.args[0]
    detail = "; ".join(f"{k}={v}" for k, v in item.user_properties)
    prev = _RESULTS.get(label)
    if rep.failed or prev is None or (rep.when == "call" and prev[0] != "FAIL"):
        status = "FAIL" if rep.failed else ("PASS" if rep.when == "call" else "SKIP")
        _RESULTS[label] = (status, detail)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_RESULTS, key=lambda s: int(s[2:])):
        status, detail = _RESULTS[label]
        terminalreporter.write_line(f"{label:<5} {status}  {detail}")
