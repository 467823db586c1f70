"""
Gauss weights and dyadic Weyl sums
==================================
"""

# %%
import numpy as np

from revlab import LittlewoodPaleyBank, RationalTime, expand, gauss_weights, weyl_scan

for p, q in [(1, 3), (1, 4), (1, 6), (2, 5)]:
    W = gauss_weights(p, q).W
    print(f"{p}/{q}: |W_k| =", np.round(np.abs(W), 6))

# %%
# At a Diophantine time the dyadic sums grow like 2^(j/2); at t = 0 like 2^j.
bank = LittlewoodPaleyBank(12)
c = expand("phi", 40).convergents[-1]
for t in (RationalTime(c.p, c.q), 0.0):
    report = weyl_scan(t, 0.1, 4, 12, bank, 2 ** 14)
    print(t, np.round(report.ratios, 3), "passed" if report.passed else "failed")
