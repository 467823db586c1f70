"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (printed in the terminal summary) and then
asserts, so a failing criterion shows up both in the summary and as a test
failure.
"""
import math
import random
import time
import warnings
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from revlab import (FourierSeries, LittlewoodPaleyBank, PiecewiseConstant, RationalTime,
                    SampledGraph, TorusGrid, bo_from_schrodinger, bo_revival, evolve_bo,
                    evolve_schrodinger, expand, fit_dimension, gauss_weights, hilbert,
                    holder_exponent_estimate, l2_norm, lattice_safe_grid, levy_rate, numbox,
                    to_series, weyl_scan)
from revlab.contfrac import LEVY_RHO, gap
from revlab.gauss import gauss_weights_direct
from revlab.initial_data import truncation_tail
from revlab.series import evaluate, grid_l2_distance

from conftest import random_real_series, random_step


def revival_dimension(p, q):
    u0 = PiecewiseConstant.canonical()
    rt = RationalTime(p, q)
    start = time.perf_counter()
    grid = lattice_safe_grid(10_000, u0, rt)
    u = bo_revival(u0, rt, grid)
    fit = fit_dimension(SampledGraph(grid.nodes, u))
    return fit, time.perf_counter() - start


def test_criterion_1_golden_dimension(report):
    fit, elapsed = revival_dimension(2584, 1597)
    ok = (abs(fit.D - 1.54) <= 0.08 and abs(fit.D - 1.5) <= 0.10 and fit.r2 >= 0.98
          and elapsed < 60)
    report(1, ok, f"t=2pi*2584/1597: D={fit.D:.4f} (want 1.54+-0.08 and 1.50+-0.10), "
                  f"r2={fit.r2:.5f} (>=0.98), runtime {elapsed:.1f}s (<60s)")
    assert fit.r2 >= 0.98 and elapsed < 60
    assert abs(fit.D - 1.54) <= 0.08
    assert abs(fit.D - 1.5) <= 0.10


def test_criterion_2_e_dimension(report):
    fit, elapsed = revival_dimension(23225, 8544)
    ok = abs(fit.D - 1.46) <= 0.08 and elapsed < 300
    report(2, ok, f"t=2pi*23225/8544: D={fit.D:.4f} (want 1.46+-0.08), r2={fit.r2:.5f}, "
                  f"runtime {elapsed:.1f}s (<300s)")
    assert elapsed < 300
    assert abs(fit.D - 1.46) <= 0.08


def test_criterion_3_convergent_gaps(report):
    mpmath.mp.dps = 60
    phi = expand("phi", 20)
    e = expand("e", 20)
    c_phi = next(c for c in phi.convergents if (c.p, c.q) == (2584, 1597))
    c_e = next(c for c in e.convergents if (c.p, c.q) == (23225, 8544))
    # independent multiprecision values of the same gaps
    ref_phi = float(abs(mpmath.phi - mpmath.mpf(2584) / 1597))
    ref_e = float(abs(mpmath.e - mpmath.mpf(23225) / 8544))
    assert gap(c_phi) == pytest.approx(ref_phi, rel=1e-12)
    assert gap(c_e) == pytest.approx(ref_e, rel=1e-12)
    ok_phi, ok_e = gap(c_phi) < 1.7e-6, gap(c_e) < 6.7e-9
    report(3, ok_phi and ok_e, f"phi gap {gap(c_phi):.4e} (<1.7e-6: {ok_phi}), "
                               f"e gap {gap(c_e):.5e} (<6.7e-9: {ok_e})")
    assert ok_phi
    assert ok_e


def test_criterion_4_khinchin_levy(report):
    rng = random.Random(4)
    rates = []
    for _ in range(200):
        x = Fraction("0." + "".join(str(rng.randrange(10)) for _ in range(100)))
        rates.append(levy_rate(expand(x, 40)))
    mean = sum(rates) / len(rates)
    ok = abs(mean - LEVY_RHO) <= 0.05 * LEVY_RHO
    report(4, ok, f"mean levy rate {mean:.4f} vs {LEVY_RHO:.4f} (within 5%)")
    assert ok


def test_criterion_5_oracle_equivalence(report):
    u0 = PiecewiseConstant.canonical()
    N = 2 ** 14
    series = to_series(u0, N)
    bound = 2 * truncation_tail(u0, N)
    worst = 0.0
    for p, q in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 5)]:
        rt = RationalTime(p, q)
        grid = lattice_safe_grid(2 ** 15, u0, rt)
        d = grid_l2_distance(bo_revival(u0, rt, grid), evaluate(evolve_bo(series, rt), grid), grid)
        worst = max(worst, d)
    grid = TorusGrid.midpoint(10_000)
    exact = all(np.array_equal(bo_revival(u0, RationalTime(p, 1), grid), u0(grid.nodes))
                for p in (0, 1))
    ok = worst <= bound and exact
    report(5, ok, f"max L2 distance {worst:.3e} <= 2*tail {bound:.3e}; "
                  f"0/1 and 1/1 reproduce u0 exactly: {exact}")
    assert ok


def test_criterion_6_schrodinger_identity(report, rng):
    N = 2 ** 10
    worst = 0.0
    for _ in range(100):
        u0 = to_series(random_step(rng), N)
        t = float(rng.uniform(-100, 100))
        w = bo_from_schrodinger(evolve_schrodinger(u0, t), u0[0])
        err = np.abs(w.coeffs - evolve_bo(u0, t).coeffs).max()
        worst = max(worst, err)
    ok = worst <= 1e-13
    report(6, ok, f"max coefficient error {worst:.2e} over 100 random (IC, t) (<=1e-13)")
    assert ok


def test_criterion_7_spectral_suite(report, rng):
    f = random_real_series(rng, 1000)
    HH = hilbert(hilbert(f)).coeffs
    expected = -f.coeffs.copy()
    expected[f.N] = 0
    err_h = np.abs(HH - expected).max()

    err_p = 0.0
    g = to_series(PiecewiseConstant.canonical(), 2 ** 12)
    for t in rng.uniform(-1e4, 1e4, 20):
        for flow in (evolve_bo, evolve_schrodinger):
            err_p = max(err_p, abs(l2_norm(flow(g, float(t))) / l2_norm(g) - 1))

    err_w = 0.0
    for q in range(1, 201):
        for p in range(q):
            if math.gcd(p, q) == 1:
                W = gauss_weights(p, q).W
                err_w = max(err_w, abs(W.sum() - q) / q ** 2,
                            abs(np.sum(np.abs(W) ** 2) - q ** 2) / q ** 2)
    err_m = 0.0
    for q in range(1, 200, 2):
        for p in range(q):
            if math.gcd(p, q) == 1:
                err_m = max(err_m, np.abs(np.abs(gauss_weights_direct(p, q)) - math.sqrt(q)).max())
    ok = err_h <= 1e-14 and err_p <= 1e-12 and err_w <= 1e-10 and err_m <= 1e-10
    report(7, ok, f"H^2 err {err_h:.1e}, Parseval rel err {err_p:.1e}, "
                  f"Gauss invariants rel err {err_w:.1e}, ||W_k|-sqrt q| {err_m:.1e}")
    assert ok


def test_criterion_8_weyl_scan(report):
    bank = LittlewoodPaleyBank(12)
    deepest = expand("phi", 40).convergents[-1]
    rt = RationalTime(deepest.p, deepest.q)
    golden = weyl_scan(rt, 0.1, 4, 12, bank, 2 ** 14)
    r = golden.ratios
    last3_not_increasing = not (r[-3] < r[-2] < r[-1])
    control = weyl_scan(0.0, 0.1, 4, 12, bank, 2 ** 14).ratios
    growth = control[-1] / control[0]
    ok = np.all(np.isfinite(r)) and last3_not_increasing and growth >= 2
    report(8, ok, f"t=2pi*{rt}: max ratio {r.max():.3f}, last three "
                  f"{', '.join(f'{v:.3f}' for v in r[-3:])}; t=0 growth x{growth:.1f} (>=2)")
    assert ok


def test_criterion_9_regularity_dichotomy(report):
    bank = LittlewoodPaleyBank(14)
    u0 = to_series(PiecewiseConstant.canonical(), 2 ** 14)
    grid = TorusGrid(2 ** 16)
    golden = holder_exponent_estimate(bank, evolve_bo(u0, RationalTime(2584, 1597)), grid)
    with warnings.catch_warnings():
        # an exponent at or below 0 is expected here and is reported, not warned about
        warnings.simplefilter("ignore")
        third = holder_exponent_estimate(bank, evolve_bo(u0, RationalTime(1, 3)), grid)
    x = np.linspace(-np.pi, np.pi, 10_000)
    smooth = fit_dimension(SampledGraph(x, np.sin(x))).D
    ok = 0.35 <= golden <= 0.6 and third <= 0.15 and abs(smooth - 1) <= 0.05
    report(9, ok, f"golden-time exponent {golden:.3f} in [0.35,0.6]; t=2pi/3 exponent "
                  f"{third:.3f} <= 0.15; smooth graph D={smooth:.4f} (1+-0.05)")
    assert ok


def test_criterion_10_box_counter(report, golden_revival):
    x = np.linspace(0.0, 1.0, 1000)
    const, line, steep = (SampledGraph(x, y) for y in (np.zeros_like(x), x, 3 * x))
    traces = [numbox(const, 0.1) == 11, numbox(line, 0.1) == 11,
              numbox(line, 1.5) == 1, numbox(steep, 1.5) == 3]
    grid, u = golden_revival
    g = SampledGraph(grid.nodes, u)
    eps = np.geomspace(2 * np.pi / 8, 8 * np.pi / 10_000, 20)
    threads_equal = [numbox(g, e, 1) for e in eps] == [numbox(g, e, 8) for e in eps]
    ok = all(traces) and threads_equal
    report(10, ok, f"hand traces {sum(traces)}/4 exact; counts thread-independent: {threads_equal}")
    assert ok
