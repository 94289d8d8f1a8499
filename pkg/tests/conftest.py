import pytest

from freeprod import FreeProduct, preset


@pytest.fixture(scope="session")
def z2z3():
    return FreeProduct(preset("cyclic2"), preset("cyclic3"))


@pytest.fixture(scope="session")
def z2z2():
    return FreeProduct(preset("cyclic2"), preset("cyclic2"))


@pytest.fixture(scope="session")
def s3z2():
    return FreeProduct(preset("sym3"), preset("cyclic2"))


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid and report.when == "call":
        name = report.nodeid.split("::")[-1][len("test_criterion_"):]
        _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        num, _, title = name.partition("_")
        status = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {int(num):2d}  {status}  {title.replace('_', ' ')}")
