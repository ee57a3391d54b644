from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

# criterion label -> all cases passed so far (insertion order = report order)
_acceptance: dict[str, bool] = {}


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion tag")


# One PASS/FAIL line per acceptance criterion, printed in the terminal summary.
@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and (rep.when == "call" or rep.failed):
        label = marker.args[0]
        _acceptance[label] = _acceptance.get(label, True) and rep.passed


def pytest_terminal_summary(terminalreporter):
    if _acceptance:
        terminalreporter.section("acceptance criteria")
        for label, ok in _acceptance.items():
            terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}")
