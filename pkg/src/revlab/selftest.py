"""Fast end-to-end consistency checks used by ``revlab selftest``."""
from __future__ import annotations

import sys

import numpy as np

from .contfrac import expand
from .evolution import bo_from_schrodinger, evolve_bo, evolve_schrodinger
from .gauss import gauss_weights
from .initial_data import PiecewiseConstant, to_series, truncation_tail
from .phase import RationalTime
from .revival import bo_revival, lattice_safe_grid
from .series import evaluate, grid_l2_distance, hilbert, l2_norm


def _checks():
    u0 = PiecewiseConstant.canonical()
    s = to_series(u0, 1024)
    yield "hilbert squared is minus identity off the mean", \
        np.abs(hilbert(hilbert(s)).coeffs[s.N + 1:] + s.coeffs[s.N + 1:]).max() < 1e-14
    yield "Parseval under the BO flow", \
        abs(l2_norm(evolve_bo(s, 1.234)) - l2_norm(s)) < 1e-12 * l2_norm(s)
    v = evolve_schrodinger(s, 0.77)
    yield "BO from Schrodinger identity", \
        np.abs(bo_from_schrodinger(v, s[0]).coeffs - evolve_bo(s, 0.77).coeffs).max() < 1e-13
    gw = gauss_weights(3, 7)
    yield "Gauss weights have modulus sqrt(q) for odd q", np.allclose(np.abs(gw.W), np.sqrt(7))
    conv = expand("phi", 16)[-1]
    yield "golden convergent 2584/1597", (conv.p, conv.q) == (2584, 1597)
    rt = RationalTime(1, 3)
    grid = lattice_safe_grid(2000, u0, rt)
    big = to_series(u0, 4096)
    dist = grid_l2_distance(bo_revival(u0, rt, grid), evaluate(evolve_bo(big, rt), grid), grid)
    yield "revival matches the truncated series", dist <= 2 * truncation_tail(u0, 4096)


def run_selftest(stream=sys.stdout) -> int:
    failures = 0
    for name, ok in _checks():
        stream.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
        failures += not ok
    return failures
