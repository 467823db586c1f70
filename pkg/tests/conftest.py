import numpy as np
import pytest

from revlab import PiecewiseConstant, RationalTime, TorusGrid, bo_revival, lattice_safe_grid

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def canonical():
    return PiecewiseConstant.canonical()


@pytest.fixture(scope="session")
def golden_revival(canonical):
    """Figure-2 configuration: t = 2pi 2584/1597 on 10^4 nodes."""
    rt = RationalTime(2584, 1597)
    grid = lattice_safe_grid(10_000, canonical, rt)
    return grid, bo_revival(canonical, rt, grid)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def report():
    def _report(criterion, ok, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
        return ok
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_real_series(rng, N):
    from revlab import FourierSeries

    c = rng.standard_normal(2 * N + 1) + 1j * rng.standard_normal(2 * N + 1)
    c = 0.5 * (c + np.conj(c[::-1]))
    return FourierSeries(c, real=True)


def random_step(rng, J=None):
    J = J or int(rng.integers(1, 6))
    a = np.sort(rng.uniform(-np.pi, np.pi, J))
    return PiecewiseConstant(tuple(a), tuple(rng.uniform(-2, 2, J)))
