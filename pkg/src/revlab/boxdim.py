"""Box-counting dimension of sampled graphs.

``numbox`` follows the tower-counting procedure literally: the x-range
``[a, b]`` is cut into ``floor((b - a)/eps) + 1`` half-open towers
``[(k-1) eps + a, k eps + a)`` and a tower whose samples span ``J`` in ``y``
needs ``floor(J/eps) + 1`` boxes.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import FitError


class EpsilonTooSmallError(ValueError):
    """Box size below ``2 (b - a) / N``: fewer than two samples per tower."""


@dataclass(frozen=True, eq=False)
class SampledGraph:
    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        if x.shape != y.shape or x.ndim != 1:
            raise ValueError("x and y must be 1-d arrays of equal length")
        if x.size < 2 or np.any(np.diff(x) <= 0):
            raise ValueError("x must be strictly increasing with at least two samples")
        if not np.all(np.isfinite(y)):
            raise ValueError("graph values must be finite")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def width(self) -> float:
        return float(self.x[-1] - self.x[0])


def tower_edges(a: float, eps: float, n_towers: int) -> np.ndarray:
    k = np.arange(n_towers + 1, dtype=float)
    return k * eps + a


def numbox(g: SampledGraph, eps: float, threads: int = 1) -> int:
    """Number of ``eps``-boxes covering the graph, tower by tower."""
    x, y = g.x, g.y
    N = x.size
    a, b = x.min(), x.max()
    if eps < 2 * (b - a) / N:
        raise EpsilonTooSmallError(f"eps={eps!r} below 2(b-a)/N = {2 * (b - a) / N!r}")
    n_towers = math.floor((b - a) / eps) + 1
    edges = tower_edges(a, eps, n_towers)
    # tower k (0-based) holds x with edges[k] <= x < edges[k+1]
    tower = np.searchsorted(edges, x, side="right") - 1
    inside = (tower >= 0) & (tower < n_towers)
    tower, yy = tower[inside], y[inside]
    starts = np.searchsorted(tower, np.arange(n_towers), side="left")
    ends = np.searchsorted(tower, np.arange(n_towers), side="right")
    if np.any(ends == starts):
        empty = int(np.argmax(ends == starts)) + 1
        raise AssertionError(f"tower {empty} of {n_towers} holds no samples")

    def count(chunk):
        s, e = starts[chunk], ends[chunk]
        hi = np.maximum.reduceat(yy, s)[: len(s)] if len(s) else np.array([])
        lo = np.minimum.reduceat(yy, s)[: len(s)] if len(s) else np.array([])
        # reduceat over contiguous starts spans exactly [s_i, s_{i+1}); the last tower ends at e
        last = slice(s[-1], e[-1]) if len(s) else None
        if last is not None:
            hi[-1], lo[-1] = yy[last].max(), yy[last].min()
        return int(np.sum(np.floor((hi - lo) / eps).astype(np.int64) + 1))

    chunks = np.array_split(np.arange(n_towers), max(1, min(threads, n_towers)))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            return sum(pool.map(count, chunks))
    return sum(count(c) for c in chunks)


def default_epsilons(g: SampledGraph, num: int = 20) -> np.ndarray:
    """Geometric grid from ``4 (b - a)/N`` up to ``(b - a)/8``, largest first."""
    w = g.width
    return np.geomspace(w / 8, 4 * w / g.x.size, num)


@dataclass(frozen=True, eq=False)
class DimensionFit:
    epsilons: np.ndarray
    counts: np.ndarray
    D: float
    intercept: float
    r2: float
    eps_policy: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"epsilons": [float(e) for e in self.epsilons],
                "counts": [int(c) for c in self.counts],
                "D": self.D, "r2": self.r2, "eps_policy": self.eps_policy}


def fit_dimension(g: SampledGraph, eps_grid=None, fit_window=None, threads: int = 1) -> DimensionFit:
    """Least-squares slope of ``log M(eps)`` against ``log(1/eps)``.

    ``fit_window=(lo, hi)`` keeps only box sizes with ``lo <= eps <= hi``.
    """
    policy = {"rule": "explicit"}
    if eps_grid is None:
        eps_grid = default_epsilons(g)
        policy = {"rule": "geometric", "num": len(eps_grid),
                  "min": float(eps_grid.min()), "max": float(eps_grid.max())}
    eps = np.sort(np.asarray(eps_grid, dtype=float))[::-1]
    if fit_window is not None:
        lo, hi = fit_window
        eps = eps[(eps >= lo) & (eps <= hi)]
        policy["fit_window"] = [float(lo), float(hi)]
    if eps.size < 8:
        raise FitError(f"need at least 8 box sizes, got {eps.size}")
    counts = np.array([numbox(g, e, threads) for e in eps])
    if np.all(counts == counts[0]):
        raise FitError("all box counts are equal; the fit is degenerate")
    X, Y = np.log(1 / eps), np.log(counts)
    slope, intercept = np.polyfit(X, Y, 1)
    resid = Y - (slope * X + intercept)
    r2 = 1 - resid @ resid / np.sum((Y - Y.mean()) ** 2)
    return DimensionFit(eps, counts, float(slope), float(intercept), float(r2), policy)


def raster_box_count(g: SampledGraph, eps: float, refine: int = 8) -> int:
    """Independent counter: occupied cells of a fixed ``eps`` mesh.

    The graph is linearly interpolated on ``refine`` points per sample gap and
    every cell touched by a segment's vertical extent is marked.
    """
    t = np.linspace(0, 1, refine, endpoint=False)
    xs = (g.x[:-1, None] + t * np.diff(g.x)[:, None]).ravel()
    ys = (g.y[:-1, None] + t * np.diff(g.y)[:, None]).ravel()
    xs, ys = np.append(xs, g.x[-1]), np.append(ys, g.y[-1])
    col = np.floor((xs - xs[0]) / eps).astype(np.int64)
    row = np.floor((ys - ys.min()) / eps).astype(np.int64)
    # fill vertical runs between consecutive points so steep segments stay connected
    lo = np.minimum(row[:-1], row[1:])
    hi = np.maximum(row[:-1], row[1:])
    cells = set()
    for c, l, h in zip(col[:-1], lo, hi):
        for r in range(l, h + 1):
            cells.add((c, r))
    cells.add((col[-1], row[-1]))
    return len(cells)
