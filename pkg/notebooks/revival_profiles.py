"""
Revivals at rational times
==========================

At t = 2pi p/q the Benjamin-Ono solution started from a step function is a
finite sum of shifted copies of the datum and of its Hilbert transform. Each
jump comes back as a logarithmic cusp.
"""

# %%
import numpy as np

from revlab import (PiecewiseConstant, RationalTime, bo_revival, evolve_bo, lattice_safe_grid,
                    schrodinger_revival, to_series)
from revlab.initial_data import truncation_tail
from revlab.revival import bo_revival_at
from revlab.series import evaluate, grid_l2_distance

u0 = PiecewiseConstant.canonical()
rt = RationalTime(1, 3)
grid = lattice_safe_grid(2000, u0, rt)

u = bo_revival(u0, rt, grid)
v = schrodinger_revival(u0, rt, grid)
print("grid offset", grid.offset)
print("range of u:", u.min(), u.max())
print("distinct values of Re v:", np.unique(np.round(v.real, 12)))

# %%
# The cusps sit where Re v or Im v jumps. Stepping towards one shows the log growth.
a = -np.pi / 2 + 2 * np.pi / 3
for d in (1e-2, 1e-4, 1e-6, 1e-8):
    print(f"distance {d:.0e}: u = {bo_revival_at(u0, rt, a + d)[0]:+.6f}")

# %%
# The same profile from the truncated Fourier series, compared in L2.
N = 2 ** 14
spectral = evaluate(evolve_bo(to_series(u0, N), rt), grid)
print("L2 distance to spectral solution:", grid_l2_distance(u, spectral, grid))
print("tail of the truncated datum:     ", truncation_tail(u0, N))
