import numpy as np
import pytest

from revlab.boxdim import (EpsilonTooSmallError, SampledGraph, default_epsilons, fit_dimension,
                           numbox, raster_box_count)
from revlab.errors import FitError


def unit_graph(y_of_x, n=1000):
    x = np.linspace(0.0, 1.0, n)
    return SampledGraph(x, y_of_x(x))


def test_hand_traces():
    const = unit_graph(np.zeros_like)
    line = unit_graph(lambda x: x)
    steep = unit_graph(lambda x: 3 * x)
    # floor(1/0.1) + 1 = 11 towers of one box each
    assert numbox(const, 0.1) == 11
    assert numbox(line, 0.1) == 11
    # a single tower of height J needs floor(J/eps) + 1 boxes
    assert numbox(line, 1.5) == 1
    assert numbox(steep, 1.5) == 3
    assert numbox(const, 0.25) == 5


def test_small_hand_trace():
    g = SampledGraph(np.array([0.0, 1.0, 2.0, 3.0, 4.0]), np.array([0.0, 5.0, 1.0, 1.0, 9.0]))
    # towers [0,2): y in {0,5} -> 3 boxes; [2,4): {1,1} -> 1; [4,6): {9} -> 1
    assert numbox(g, 2.0) == 5


def test_guard():
    g = unit_graph(np.sin, n=100)
    with pytest.raises(EpsilonTooSmallError):
        numbox(g, 0.01)
    numbox(g, 2 / 100)


def test_input_validation():
    with pytest.raises(ValueError):
        SampledGraph(np.array([0.0, 0.0, 1.0]), np.zeros(3))
    with pytest.raises(ValueError):
        SampledGraph(np.arange(3.0), np.array([0, np.nan, 1]))


def test_finer_boxes_need_more_boxes():
    g = unit_graph(lambda x: np.sin(6 * x) + 0.3 * np.cos(40 * x), n=4000)
    eps = 2.0 ** -np.arange(1, 10)
    counts = [numbox(g, e) for e in eps]
    assert all(b >= a for a, b in zip(counts, counts[1:]))


def test_power_of_two_scaling_invariance(rng):
    x = np.sort(rng.uniform(0, 1, 2000))
    y = np.cumsum(rng.standard_normal(2000)) / 40
    g, h = SampledGraph(x, y), SampledGraph(4 * x, 4 * y)
    for e in (0.01, 0.05, 0.2):
        assert numbox(g, e) == numbox(h, 4 * e)


def test_smooth_graphs_have_dimension_one():
    const = fit_dimension(unit_graph(np.zeros_like, n=10_000))
    assert const.D == pytest.approx(1.0, abs=0.02)
    x = np.linspace(-np.pi, np.pi, 10_000)
    sine = fit_dimension(SampledGraph(x, np.sin(x)))
    assert sine.D == pytest.approx(1.0, abs=0.05)
    assert sine.r2 > 0.99


def test_raster_oracle_agrees_within_factor_four(rng):
    y = np.cumsum(rng.standard_normal(5000)) / 70
    g = SampledGraph(np.linspace(0, 1, 5000), y)
    for e in (0.005, 0.02, 0.08):
        a, b = numbox(g, e), raster_box_count(g, e)
        assert 0.25 <= a / b <= 4


def test_thread_count_does_not_change_counts(rng):
    g = SampledGraph(np.linspace(0, 1, 10_000), rng.standard_normal(10_000))
    eps = default_epsilons(g)
    assert [numbox(g, e, 1) for e in eps] == [numbox(g, e, 7) for e in eps]


def test_default_epsilons():
    g = unit_graph(np.sin, n=1000)
    eps = default_epsilons(g)
    assert eps.size == 20
    assert eps.max() == pytest.approx(1 / 8) and eps.min() == pytest.approx(4 / 1000)


def test_degenerate_fits():
    g = unit_graph(np.zeros_like)
    with pytest.raises(FitError):
        fit_dimension(g, eps_grid=np.linspace(1.1, 2.0, 8))
    with pytest.raises(FitError):
        fit_dimension(g, eps_grid=[0.1, 0.2, 0.3])
    fit = fit_dimension(g, eps_grid=np.geomspace(0.01, 0.1, 10), fit_window=(0.01, 0.1))
    assert fit.eps_policy["fit_window"] == [0.01, 0.1]
