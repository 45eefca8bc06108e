import pytest

from bsdh_fano.betamat import parse_matrix

# Reference matrices (1)-(5).  The -2 in row 4 of matrix (5) sits in column 5;
# the diagonal must stay zero.
INTRO_MATRICES = {
    1: """0 -1 0 0 0
          0 0 2 -1 2
          0 0 0 0 0
          0 0 0 0 -1
          0 0 0 0 0""",
    2: """0 -1 0 -1 0
          0 0 0 -2 0
          0 0 0 0 -1
          0 0 0 0 -2
          0 0 0 0 0""",
    3: """0 2 -1 2 -1 2
          0 0 2 -1 2 0
          0 0 0 0 -2 0
          0 0 0 0 -1 -1
          0 0 0 0 0 -1
          0 0 0 0 0 0""",
    4: """0 2 -1 -1 2
          0 0 2 -2 2
          0 0 0 -1 0
          0 0 0 0 -1
          0 0 0 0 0""",
    5: """0 -1 -1 -1 0
          0 0 -1 0 -1
          0 0 0 0 -3
          0 0 0 0 -2
          0 0 0 0 0""",
}


@pytest.fixture(scope="session")
def intro():
    return {k: parse_matrix(v) for k, v in INTRO_MATRICES.items()}


_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): acceptance criterion number n")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "acceptance", None)
    if crit is None:
        return
    n, title = crit
    entry = _acceptance.setdefault(n, {"title": title, "failed": []})
    if report.failed:
        entry["failed"].append(report.nodeid.split("::")[-1])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        rep.acceptance = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        entry = _acceptance[n]
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"criterion {n}: {status}  {entry['title']}"
        if entry["failed"]:
            line += "  (failed: " + ", ".join(entry["failed"]) + ")"
        terminalreporter.write_line(line)
