"""Littlewood-Paley analysis on the torus.

The dyadic bank uses the telescoping construction ``chi(xi) = phi(xi) - phi(2 xi)``
where ``phi`` is the smooth step equal to 1 on ``(-inf, 1]`` and to 0 on
``[2, inf)``. Then ``chi_j(xi) = chi(2^-j xi)`` is supported in
``[2^(j-1), 2^(j+1)]`` and the scales sum to one exactly.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import FitError, ScaleError
from .series import FourierSeries, TorusGrid, derivative, evaluate_complex


def _bump_tail(s):
    s = np.asarray(s, dtype=float)
    out = np.zeros_like(s)
    pos = s > 0
    out[pos] = np.exp(-1.0 / s[pos])
    return out


def smooth_step(xi):
    """C-infinity cutoff: 1 for ``xi <= 1``, 0 for ``xi >= 2``."""
    xi = np.asarray(xi, dtype=float)
    left = _bump_tail(2.0 - xi)
    right = _bump_tail(xi - 1.0)
    return left / (left + right)


def chi(xi):
    return smooth_step(xi) - smooth_step(2.0 * np.asarray(xi, dtype=float))


@dataclass(frozen=True)
class LittlewoodPaleyBank:
    """Multipliers ``chi_0, ..., chi_jmax`` with ``chi_0 = 1 - sum_{j>=1} chi_j``."""

    j_max: int

    def __post_init__(self):
        if not 1 <= self.j_max <= 16:
            raise ValueError("j_max must lie in [1, 16]")
        n = np.arange(0, 2 ** self.j_max + 1)
        total = sum(self.chi(j, n) for j in range(self.j_max + 1))
        assert np.abs(total - 1.0).max() <= 1e-12, "partition of unity violated"

    def chi(self, j: int, n) -> np.ndarray:
        """``chi_j(|n|)`` for integer array ``n``."""
        a = np.abs(np.asarray(n, dtype=float))
        if j == 0:
            return 1.0 - sum(chi(a / 2.0 ** k) for k in range(1, self.j_max + 1))
        if not 1 <= j <= self.j_max:
            raise ValueError(f"scale {j} outside bank range [0, {self.j_max}]")
        return chi(a / 2.0 ** j)

    def table(self, n_max: int) -> np.ndarray:
        """Sampled values, shape ``(j_max + 1, n_max + 1)``."""
        n = np.arange(n_max + 1)
        return np.stack([self.chi(j, n) for j in range(self.j_max + 1)])


def build_bank(j_max: int) -> LittlewoodPaleyBank:
    return LittlewoodPaleyBank(j_max)


def top_scale(bank: LittlewoodPaleyBank, f: FourierSeries) -> int:
    """Largest ``j`` whose shell fits inside the truncation window of ``f``."""
    return min(bank.j_max, int(math.floor(math.log2(f.N))) - 1)


def project(bank: LittlewoodPaleyBank, f: FourierSeries, j: int) -> FourierSeries:
    """``K_j f``: multiply ``c(n)`` by ``chi_j(|n|)``."""
    if j >= 1 and 2 ** (j + 1) > f.N:
        raise ScaleError(f"scale {j} needs N >= {2 ** (j + 1)}, series has N = {f.N}")
    return f.apply_multiplier(bank.chi(j, f.indices))


def _lp_norm(values: np.ndarray, p, grid: TorusGrid) -> float:
    a = np.abs(values)
    if p in (1, "1", "one"):
        return float(grid.spacing * a.sum())
    if p in (math.inf, "inf", "infinity"):
        return float(a.max())
    raise ValueError(f"only p = 1 and p = inf are supported, got {p!r}")


@dataclass(frozen=True)
class BesovReport:
    alpha: float
    p: object
    scales: np.ndarray
    norms: np.ndarray
    weighted: np.ndarray

    @property
    def sup(self) -> float:
        return float(self.weighted.max())


def shell_norms(bank, f: FourierSeries, p, grid: TorusGrid, scales=None):
    if scales is None:
        scales = range(0, top_scale(bank, f) + 1)
    scales = np.array(list(scales))
    norms = np.array([_lp_norm(evaluate_complex(project(bank, f, int(j)), grid), p, grid)
                      for j in scales])
    return scales, norms


def besov_seminorm(bank: LittlewoodPaleyBank, f: FourierSeries, alpha: float, p,
                   grid: TorusGrid) -> BesovReport:
    """Per-scale values ``2^(alpha j) ||K_j f||_p`` on the grid and their maximum.

    ``p`` is 1 or ``inf``. The grid must resolve the top shell:
    ``M >= 4 * 2^j_top``.
    """
    j_top = top_scale(bank, f)
    if grid.M < 4 * 2 ** j_top:
        raise ValueError(f"grid of {grid.M} nodes cannot resolve scale {j_top}")
    scales, norms = shell_norms(bank, f, p, grid)
    return BesovReport(alpha, p, scales, norms, 2.0 ** (alpha * scales) * norms)


def holder_exponent_estimate(bank: LittlewoodPaleyBank, f: FourierSeries, grid: TorusGrid,
                             scales=None) -> float:
    """Minus the least-squares slope of ``log2 ||K_j f||_inf`` against ``j``.

    The default fit window is ``j`` in ``[4, j_top - 3]``.
    """
    if scales is None:
        scales = range(4, top_scale(bank, f) - 2)
    scales = list(scales)
    if len(scales) < 6:
        raise FitError(f"need at least 6 scales, got {len(scales)}")
    js, norms = shell_norms(bank, f, math.inf, grid, scales)
    if np.any(norms <= 0):
        raise FitError("a shell norm vanished; cannot take logarithms")
    slope = np.polyfit(js, np.log2(norms), 1)[0]
    alpha = -float(slope)
    if not 0 < alpha < 1:
        warnings.warn(f"estimated exponent {alpha:.3f} lies outside (0, 1), where "
                      "B^alpha_{inf,inf} and C^alpha need not coincide", stacklevel=2)
    return alpha


@dataclass(frozen=True)
class BernsteinReport:
    j: int
    constant: float
    ratios: np.ndarray

    @property
    def scaled_min(self) -> float:
        return float(self.ratios.min() / 2 ** self.j)

    @property
    def scaled_max(self) -> float:
        return float(self.ratios.max() / 2 ** self.j)

    @property
    def passed(self) -> bool:
        return 1 / self.constant <= self.scaled_min and self.scaled_max <= self.constant


def derivative_ratio(u: FourierSeries, oversample: int = 16) -> float:
    """``||u'||_inf / ||u||_inf`` from grid maxima."""
    grid = TorusGrid(oversample * 2 * u.N)
    num = np.abs(evaluate_complex(derivative(u), grid)).max()
    den = np.abs(evaluate_complex(u, grid)).max()
    return float(num / den)


def bernstein_check(bank: LittlewoodPaleyBank, trials: int, j: int = 8, constant: float = 4.0,
                    seed: int = 0) -> BernsteinReport:
    """Ratios ``||u'||_inf / ||u||_inf`` for random shell series ``u = K_j f``.

    Bernstein's inequality predicts ``2^j / C <= ratio <= C 2^j``.
    """
    if j > bank.j_max:
        raise ValueError("scale outside the bank")
    rng = np.random.default_rng(seed)
    N = 2 ** (j + 1)
    ratios = []
    for _ in range(trials):
        c = rng.standard_normal(2 * N + 1) + 1j * rng.standard_normal(2 * N + 1)
        u = project(bank, FourierSeries(c, real=False), j)
        ratios.append(derivative_ratio(u))
    return BernsteinReport(j, constant, np.array(ratios))
