"""
Box-counting dimension near irrational times
============================================

Deep convergents of phi and e give rational times whose revival profiles look
like the fractal solution at the irrational limit. The graph is covered by
towers of boxes and the count is fitted against the box size.
"""

# %%
import time

import numpy as np

from revlab import PiecewiseConstant, RationalTime, SampledGraph, bo_revival, fit_dimension
from revlab import lattice_safe_grid, numbox

u0 = PiecewiseConstant.canonical()

for p, q in [(2584, 1597), (23225, 8544)]:
    rt = RationalTime(p, q)
    start = time.perf_counter()
    grid = lattice_safe_grid(10_000, u0, rt)
    u = bo_revival(u0, rt, grid)
    fit = fit_dimension(SampledGraph(grid.nodes, u))
    print(f"t = 2pi*{rt}: D = {fit.D:.4f}, r2 = {fit.r2:.5f}, {time.perf_counter() - start:.1f}s")

# %%
# Local slopes between neighbouring box sizes show where the graph looks fractal.
g = SampledGraph(grid.nodes, u)
eps = np.geomspace(2 * np.pi / 8, 8 * np.pi / 10_000, 20)
counts = np.array([numbox(g, e) for e in eps])
slopes = np.diff(np.log(counts)) / np.diff(np.log(1 / eps))
for e, s in zip(eps[1:], slopes):
    print(f"eps {e:.4f}  local slope {s:.3f}")

# %%
# A smooth graph for comparison.
x = np.linspace(-np.pi, np.pi, 10_000)
print("sin:", fit_dimension(SampledGraph(x, np.sin(x))).D)
