import pytest

from hai_welfare.engine import SimConfig
from hai_welfare.model import ModelParams


@pytest.fixture
def small_config():
    return SimConfig(n_humans=10, n_ai=20, steps=5, seed=7)


@pytest.fixture
def spec_params():
    """Weights used by the hand-worked interaction examples."""
    return ModelParams(phi=0.2, psi=0.1, alpha=0.05, eta=0.5, gamma=0.3, risk=0.5)


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    """Record one pass/fail line per acceptance criterion."""

    def _report(number, ok, detail):
        _ACCEPTANCE_LINES.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
