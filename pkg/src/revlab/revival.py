"""Exact solutions at rational times ``t = 2pi p/q``.

At such times both flows are finite superpositions of translated copies of
the initial datum. For linear Benjamin-Ono::

    u(x) = (1/q) sum_k [Re W_k u0(x - 2pi k/q) - Im W_k (H u0)(x - 2pi k/q)]

with the Gauss weights ``W_k`` of :func:`revlab.gauss.gauss_weights`, and the
Schrodinger solution is ``v(x) = (1/q) sum_k W_k u0(x - 2pi k/q)``. The
Hilbert transform of a step function is evaluated in closed form, so the
output is exact up to rounding.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .gauss import gauss_weights
from .errors import SingularPointError
from .initial_data import BREAKPOINT_TOL, PiecewiseConstant, log_sine_kernel
from .phase import RationalTime
from .series import TorusGrid

# shifts evaluated per block; bounds the (block x nodes) work arrays
SHIFT_BLOCK = 256
TABLE_THRESHOLD = 512


def default_threads() -> int:
    return max(1, int(os.environ.get("REVLAB_THREADS", "1")))


def _shifts(rt: RationalTime) -> np.ndarray:
    return 2 * np.pi * np.arange(rt.q) / rt.q


def _superpose_direct(u0: PiecewiseConstant, x: np.ndarray, shifts, re_w, im_w,
                      threads: int) -> np.ndarray:
    jumps = u0.jumps
    blocks = [slice(s, s + SHIFT_BLOCK) for s in range(0, shifts.size, SHIFT_BLOCK)]

    def block_sum(sl):
        y = x[None, :] - shifts[sl, None]
        acc = re_w[sl] @ u0(y)
        if im_w is not None:
            acc -= im_w[sl] @ log_sine_kernel(y, u0.breakpoints, jumps)
        return acc

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(block_sum, blocks))
    else:
        parts = [block_sum(sl) for sl in blocks]
    # fixed summation order keeps results independent of the thread count
    out = np.zeros(x.size)
    for part in parts:
        out += part
    return out


def _superpose_table(values: np.ndarray, weights: np.ndarray, stride: int) -> np.ndarray:
    """``sum_k weights[k] * roll(values, k * stride)`` as a circular convolution."""
    kernel = np.zeros(values.size, dtype=weights.dtype)
    kernel[np.arange(weights.size) * stride] = weights
    return np.fft.ifft(np.fft.fft(kernel) * np.fft.fft(values))


def _check_lattice(u0: PiecewiseConstant, x: np.ndarray, rt: RationalTime):
    # x - 2pi k/q hits a breakpoint a  <=>  x - a is within tol of the lattice 2pi Z/q
    for a, jump in zip(u0.breakpoints, u0.jumps):
        if jump == 0.0:
            continue
        reduced = np.mod(x - a, 2 * np.pi / rt.q)
        dist = np.minimum(reduced, 2 * np.pi / rt.q - reduced)
        if dist.min() < BREAKPOINT_TOL:
            where = float(x[np.argmin(dist)])
            raise SingularPointError(
                f"node {where!r} shifted by a multiple of 2pi/{rt.q} hits breakpoint {a!r}")


def bo_revival_at(u0: PiecewiseConstant, rt: RationalTime, x, threads: int | None = None) -> np.ndarray:
    """Benjamin-Ono solution at ``2pi p/q`` evaluated at arbitrary points ``x``."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    _check_lattice(u0, x, rt)
    W = gauss_weights(rt.p, rt.q).W / rt.q
    return _superpose_direct(u0, x, _shifts(rt), W.real, W.imag,
                             threads or default_threads())


def bo_revival(u0: PiecewiseConstant, rt: RationalTime, grid: TorusGrid,
               threads: int | None = None) -> np.ndarray:
    """Benjamin-Ono solution at ``2pi p/q`` on ``grid``.

    When ``q > 512`` and ``q`` divides the grid size, each shift is a whole
    number of grid steps and the superposition becomes one circular
    convolution of grid samples.
    """
    x = grid.nodes
    if rt.q > TABLE_THRESHOLD and grid.M % rt.q == 0:
        _check_lattice(u0, x, rt)
        W = gauss_weights(rt.p, rt.q).W / rt.q
        profile = u0(x) + 1j * log_sine_kernel(x, u0.breakpoints, u0.jumps)
        return _superpose_table(profile, W, grid.M // rt.q).real
    return bo_revival_at(u0, rt, x, threads)


def schrodinger_revival_at(u0: PiecewiseConstant, rt: RationalTime, x,
                           threads: int | None = None) -> np.ndarray:
    x = np.atleast_1d(np.asarray(x, dtype=float))
    _check_lattice(u0, x, rt)
    W = gauss_weights(rt.p, rt.q).W / rt.q
    threads = threads or default_threads()
    re = _superpose_direct(u0, x, _shifts(rt), W.real, None, threads)
    im = _superpose_direct(u0, x, _shifts(rt), W.imag, None, threads)
    return re + 1j * im


def schrodinger_revival(u0: PiecewiseConstant, rt: RationalTime, grid: TorusGrid,
                        threads: int | None = None) -> np.ndarray:
    """Schrodinger solution at ``2pi p/q`` on ``grid`` (complex, piecewise constant)."""
    return schrodinger_revival_at(u0, rt, grid.nodes, threads)


def hilbert_of_schrodinger_revival_at(u0: PiecewiseConstant, rt: RationalTime, x) -> np.ndarray:
    """``H v`` at ``2pi p/q``, using that ``H`` commutes with translations."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    _check_lattice(u0, x, rt)
    W = gauss_weights(rt.p, rt.q).W / rt.q
    shifts = _shifts(rt)
    out = np.zeros(x.size, dtype=complex)
    for s in range(0, rt.q, SHIFT_BLOCK):
        y = x[None, :] - shifts[s:s + SHIFT_BLOCK, None]
        out += W[s:s + SHIFT_BLOCK] @ log_sine_kernel(y, u0.breakpoints, u0.jumps)
    return out


def lattice_safe_grid(M: int, u0: PiecewiseConstant, rt: RationalTime) -> TorusGrid:
    """Grid of ``M`` nodes whose shifts by ``2pi k/q`` stay clear of every breakpoint.

    Node ``x_m - 2pi k/q`` hits breakpoint ``a`` exactly when the grid offset
    lies in ``a + pi + (2pi/L) Z`` with ``L = lcm(M, q)``. Among the offsets
    that maximise the distance to these residues, the one nearest the
    midpoint offset ``pi/M`` is returned, so the plain midpoint grid is kept
    whenever it is already optimal.
    """
    L = math.lcm(M, rt.q)
    cell = 2 * np.pi / L
    residues = sorted({math.fmod(a + np.pi, cell) % cell
                       for a, jump in zip(u0.breakpoints, u0.jumps) if jump != 0.0})
    if not residues:
        return TorusGrid.midpoint(M)
    gaps = np.diff(residues + [residues[0] + cell])
    i = int(np.argmax(gaps))
    best = residues[i] + gaps[i] / 2
    # offsets best + k*cell are all optimal; pick the one nearest pi/M
    k = round((np.pi / M - best) / cell)
    offset = (best + k * cell) % (2 * np.pi / M)
    return TorusGrid(M, offset)
