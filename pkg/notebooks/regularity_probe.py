"""
Dyadic shells and Holder regularity
===================================

The decay rate of sup-norms of Littlewood-Paley pieces estimates the Holder
exponent. At the golden-ratio time it is close to 1/2; at a rational time the
cusps pin it near 0.
"""

# %%
import math
import warnings

from revlab import (LittlewoodPaleyBank, PiecewiseConstant, RationalTime, TorusGrid,
                    besov_seminorm, bernstein_check, evolve_bo, holder_exponent_estimate,
                    to_series)

bank = LittlewoodPaleyBank(14)
u0 = to_series(PiecewiseConstant.canonical(), 2 ** 14)
grid = TorusGrid(2 ** 16)

for rt in (RationalTime(2584, 1597), RationalTime(1, 3), RationalTime(0, 1)):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        alpha = holder_exponent_estimate(bank, evolve_bo(u0, rt), grid)
    print(f"t = 2pi*{rt}: estimated exponent {alpha:.3f}")

# %%
report = besov_seminorm(bank, evolve_bo(u0, RationalTime(2584, 1597)), 0.5, math.inf, grid)
for j, w in zip(report.scales, report.weighted):
    print(j, f"{w:.4f}")

# %%
b = bernstein_check(bank, trials=50, j=8)
print("Bernstein ratios / 2^j in", b.scaled_min, b.scaled_max)
