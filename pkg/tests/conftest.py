from __future__ import annotations

import pytest
from hypothesis import settings

from nearvec.dickson import dickson_build

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def dn32():
    return dickson_build(3, 2)


@pytest.fixture(scope="session")
def dn52():
    return dickson_build(5, 2)


@pytest.fixture(scope="session")
def dn31():
    return dickson_build(3, 1)


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and "criterion" in report.nodeid:
        if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
            outcome = "xfailed" if hasattr(report, "wasxfail") else report.outcome
            _acceptance[report.nodeid.split("::")[-1]] = outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        outcome = _acceptance[name]
        status = "PASS" if outcome == "passed" else "FAIL"
        note = "  (known failure, marked xfail)" if outcome == "xfailed" else ""
        terminalreporter.write_line(f"{status}  {name}{note}")
