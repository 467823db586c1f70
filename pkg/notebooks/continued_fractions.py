"""
Convergents and the Levy rate
=============================
"""

# %%
import random
from fractions import Fraction

from revlab import expand, levy_rate, select_for_scale
from revlab.contfrac import LEVY_RHO, gap

for name, depth in (("phi", 18), ("e", 12)):
    cf = expand(name, depth)
    print(name, cf.partial_quotients)
    for n, c in enumerate(cf.convergents[-4:], start=len(cf) - 4):
        print(f"  {n:2d}: {c.p}/{c.q}  gap {gap(c):.4e}")

# %%
# log(q_n)/n for random targets settles near pi^2/(12 log 2).
rng = random.Random(1)
rates = [levy_rate(expand(Fraction("0." + "".join(str(rng.randrange(10)) for _ in range(100))), 40))
         for _ in range(200)]
print("mean rate", sum(rates) / len(rates), "constant", LEVY_RHO)

# %%
# Which convergent serves dyadic scale j, and how small q * (x - p/q) is there.
cf = expand("e", 30)
for j in range(2, 40, 6):
    choice = select_for_scale(cf, j)
    print(j, choice.index, f"{choice.convergent.p}/{choice.convergent.q}", float(choice.r))
