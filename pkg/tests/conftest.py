import pytest

_results: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


@pytest.fixture
def detail(request):
    """Append a line to the summary printed for this criterion."""
    lines: list[str] = []
    request.node.user_properties.append(("detail", lines))
    return lines.append


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, title = marker.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        lines = [x for k, v in item.user_properties if k == "detail" for x in v]
        verdict = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        _results[n] = (verdict, title, "; ".join(lines))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        verdict, title, info = _results[n]
        line = f"{verdict} criterion {n}: {title}"
        terminalreporter.write_line(f"{line} [{info}]" if info else line)
