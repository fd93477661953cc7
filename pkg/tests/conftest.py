import shutil

import pytest

from wazn.lexicons import load_seed, seed_directory


@pytest.fixture(scope="session")
def lex():
    return load_seed()


@pytest.fixture
def lexdir(tmp_path):
    """A writable copy of the seed lexicon directory."""
    d = tmp_path / "lex"
    shutil.copytree(seed_directory(), d)
    return d


# Acceptance reporting: tests marked ``criterion(n, title)`` get one
# PASS/FAIL line each in the terminal summary, plus any metrics they record.
_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture
def metrics(request):
    """Dict whose entries are printed next to the criterion's result line."""
    marker = request.node.get_closest_marker("criterion")
    entry = _criteria.setdefault(marker.args[0], {"title": marker.args[1], "ok": True, "metrics": {}})
    return entry["metrics"]


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None and (report.when == "call" or report.failed):
        entry = _criteria.setdefault(marker.args[0], {"title": marker.args[1], "ok": True, "metrics": {}})
        entry["ok"] = entry["ok"] and report.passed
    return report


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        entry = _criteria[n]
        extra = "; ".join(f"{k}={v}" for k, v in entry["metrics"].items())
        line = f"AC{n} {'PASS' if entry['ok'] else 'FAIL'}  {entry['title']}"
        terminalreporter.write_line(line + (f"  [{extra}]" if extra else ""))
