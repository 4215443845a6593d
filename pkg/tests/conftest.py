import pytest

from treepack.harness.generate import named_graphs


@pytest.fixture(scope="session")
def named():
    return named_graphs()


@pytest.fixture
def triangle(named):
    return named["triangle"]


@pytest.fixture
def dtri(named):
    return named["doubled_triangle"]


_criteria: dict[int, tuple[str, str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    if rep.when == "setup" and rep.passed:
        return
    number, title = mark.args
    detail = "; ".join(f"{k}={v}" for k, v in item.user_properties)
    _criteria[number] = ("PASS" if rep.passed else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, title, detail = _criteria[number]
        line = f"criterion {number:2d} {status}: {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
