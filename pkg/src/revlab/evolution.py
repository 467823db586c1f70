"""Spectral evolution at arbitrary times.

Both flows are diagonal in Fourier space: Benjamin-Ono multiplies ``c(n)``
by ``exp(i n|n| t)`` and Schrodinger by ``exp(i n^2 t)``. No time stepping is
involved; phases go through :mod:`revlab.phase`, so a ``RationalTime`` gives
exact residues and a float time gets double-double argument reduction.
"""
from __future__ import annotations

import numpy as np

from .phase import quadratic_phase
from .series import FourierSeries, hilbert

DEFAULT_N = 2 ** 14


def _schrodinger_symbol(n, t) -> np.ndarray:
    return quadratic_phase(n, t)


def _bo_symbol(n, t) -> np.ndarray:
    e = quadratic_phase(n, t)
    # exp(i n|n| t) = conj(exp(i n^2 t)) for n < 0
    return np.where(n < 0, np.conj(e), e)


def evolve_bo(u0_series: FourierSeries, t) -> FourierSeries:
    """Linear Benjamin-Ono flow; the output stays real-flagged."""
    if not u0_series.real:
        raise ValueError("Benjamin-Ono evolution needs a real-flagged series")
    return u0_series.apply_multiplier(_bo_symbol(u0_series.indices, t), real=True)


def evolve_schrodinger(v0_series: FourierSeries, t) -> FourierSeries:
    """Linear Schrodinger flow ``i v_t = v_xx``; the output is complex."""
    return v0_series.apply_multiplier(_schrodinger_symbol(v0_series.indices, t), real=False)


def bo_from_schrodinger(v_series: FourierSeries, mean_c0: complex) -> FourierSeries:
    """Coefficients of ``Re[(I + iH) v]`` for a Schrodinger solution ``v``.

    ``(I + iH)`` doubles positive frequencies, keeps ``n = 0`` and removes
    negative ones; taking the real part then restores Hermitian symmetry.
    ``mean_c0`` is the conserved mean of the real initial datum.
    """
    w = v_series.coeffs + 1j * hilbert(v_series).coeffs
    n = v_series.indices
    pos = np.where(n > 0, w, 0)
    c = 0.5 * (pos + np.conj(pos[::-1]))
    c[v_series.N] = complex(mean_c0).real
    return FourierSeries(c, real=True)
