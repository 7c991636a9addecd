import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from ortholat import enumerate_completion, generate  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def b4():
    return generate("boolean", 2)


@pytest.fixture(scope="session")
def mo2():
    return generate("mo", 2)


@pytest.fixture(scope="session")
def o6():
    return generate("o6")


@pytest.fixture(scope="session")
def b8():
    return generate("boolean", 3)


@pytest.fixture(scope="session")
def di_b4(b4):
    return enumerate_completion(b4)


@pytest.fixture(scope="session")
def di_mo2(mo2):
    return enumerate_completion(mo2)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_acceptance[" in report.nodeid and report.when == "call":
        key = report.nodeid.split("[")[1].rstrip("]")
        _acceptance[key] = report.outcome
    elif "test_acceptance.py::test_acceptance[" in report.nodeid and report.failed:
        _acceptance[report.nodeid.split("[")[1].rstrip("]")] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    import test_acceptance as acc
    terminalreporter.section("acceptance criteria")
    for i, crit in enumerate(acc.CRITERIA, 1):
        outcome = _acceptance.get(f"criterion_{i}")
        if outcome is None:
            continue
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {i} {status} {acc.title(crit)}")
