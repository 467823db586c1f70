import numpy as np
import pytest

from revlab.errors import SingularPointError
from revlab.evolution import evolve_bo, evolve_schrodinger
from revlab.initial_data import PiecewiseConstant, hilbert_piecewise, to_series, truncation_tail
from revlab.phase import RationalTime
from revlab.revival import (bo_revival, bo_revival_at, hilbert_of_schrodinger_revival_at,
                            lattice_safe_grid, schrodinger_revival, schrodinger_revival_at)
from revlab.series import TorusGrid, evaluate, evaluate_complex, grid_l2_distance

N_SPECTRAL = 2 ** 12


@pytest.fixture(scope="module")
def step():
    return PiecewiseConstant.parse("step:-2.5=0.75,-0.4=-1,1.9=2")


def test_identity_times_reproduce_datum(canonical):
    grid = TorusGrid.midpoint(1000)
    for rt in (RationalTime(0, 1), RationalTime(1, 1), RationalTime(5, 1)):
        np.testing.assert_array_equal(bo_revival(canonical, rt, grid), canonical(grid.nodes))


def test_half_period_is_the_complement_arc(canonical):
    grid = TorusGrid.midpoint(1000)
    u = bo_revival(canonical, RationalTime(1, 2), grid)
    x = grid.nodes
    expected = (np.abs(x) > np.pi / 2).astype(float)
    np.testing.assert_allclose(u, expected, atol=1e-14)
    v = schrodinger_revival(canonical, RationalTime(1, 2), grid)
    np.testing.assert_allclose(v, expected, atol=1e-14)


@pytest.mark.parametrize("p,q", [(1, 3), (2, 5), (3, 7), (1, 6)])
def test_matches_spectral_solution(step, p, q):
    rt = RationalTime(p, q)
    grid = lattice_safe_grid(2000, step, rt)
    exact = bo_revival(step, rt, grid)
    spectral = evaluate(evolve_bo(to_series(step, N_SPECTRAL), rt), grid)
    assert grid_l2_distance(exact, spectral, grid) <= 2 * truncation_tail(step, N_SPECTRAL)


def test_schrodinger_matches_spectral(step):
    rt = RationalTime(2, 5)
    grid = lattice_safe_grid(1500, step, rt)
    exact = schrodinger_revival(step, rt, grid)
    spectral = evaluate_complex(evolve_schrodinger(to_series(step, N_SPECTRAL), rt), grid)
    assert grid_l2_distance(exact, spectral, grid) <= 2 * truncation_tail(step, N_SPECTRAL)


def test_bo_is_real_part_of_analytic_schrodinger(step, rng):
    # u = Re[v + i H v] evaluated pointwise from the two revival formulas
    for p, q in [(1, 3), (4, 9), (7, 10)]:
        rt = RationalTime(p, q)
        x = rng.uniform(-np.pi, np.pi, 200)
        v = schrodinger_revival_at(step, rt, x)
        Hv = hilbert_of_schrodinger_revival_at(step, rt, x)
        np.testing.assert_allclose(bo_revival_at(step, rt, x), (v + 1j * Hv).real, atol=1e-12)


def test_periodic_in_p(step):
    grid = lattice_safe_grid(700, step, RationalTime(3, 7))
    a = bo_revival(step, RationalTime(3, 7), grid)
    b = bo_revival(step, RationalTime(10, 7), grid)
    np.testing.assert_array_equal(a, b)


def test_mean_is_conserved(canonical):
    for p, q in [(1, 3), (2, 7), (5, 11)]:
        rt = RationalTime(p, q)
        grid = lattice_safe_grid(5000, canonical, rt)
        assert abs(bo_revival(canonical, rt, grid).mean() - canonical.mean) < 1e-3


def test_cusps_diverge_logarithmically(canonical):
    rt = RationalTime(1, 3)
    a = -np.pi / 2 + 2 * np.pi / 3  # a shifted breakpoint carrying a complex weight
    values = [abs(bo_revival_at(canonical, rt, a + d)[0]) for d in (1e-3, 1e-6, 1e-9)]
    assert values[0] < values[1] < values[2]
    # growth per decade matches the log-sine coefficient |Im W_k| / (q pi) * log(10)
    assert values[2] - values[1] == pytest.approx(values[1] - values[0], rel=1e-3)


def test_hilbert_part_at_trivial_time(canonical):
    grid = TorusGrid.midpoint(400)
    Hv = hilbert_of_schrodinger_revival_at(canonical, RationalTime(0, 1), grid.nodes)
    np.testing.assert_allclose(Hv.real, hilbert_piecewise(canonical, grid), atol=1e-13)


def test_thread_count_does_not_change_results(step):
    rt = RationalTime(400, 1021)
    grid = lattice_safe_grid(3000, step, rt)
    one = bo_revival(step, rt, grid, threads=1)
    four = bo_revival(step, rt, grid, threads=4)
    assert one.tobytes() == four.tobytes()


def test_table_path_matches_direct(canonical):
    rt = RationalTime(250, 601)
    grid = lattice_safe_grid(4 * 601, canonical, rt)
    table = bo_revival(canonical, rt, grid)
    direct = bo_revival_at(canonical, rt, grid.nodes)
    np.testing.assert_allclose(table, direct, atol=1e-10)


def test_singular_nodes_are_rejected(canonical):
    grid = TorusGrid(4)  # nodes at -pi/2, 0, pi/2, pi
    with pytest.raises(SingularPointError):
        bo_revival(canonical, RationalTime(1, 3), grid)
    with pytest.raises(SingularPointError):
        schrodinger_revival_at(canonical, RationalTime(1, 4), [0.0])


def test_lattice_safe_grid_keeps_midpoint_when_optimal(canonical):
    assert lattice_safe_grid(10_000, canonical, RationalTime(2584, 1597)).offset == pytest.approx(
        np.pi / 10_000)
    grid = lattice_safe_grid(10_000, canonical, RationalTime(23225, 8544))
    bo_revival_at(canonical, RationalTime(23225, 8544), grid.nodes[:5])
