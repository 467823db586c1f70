"""Complete and incomplete quadratic exponential sums.

``gauss_weights`` gives the revival weights
``W_k = sum_{m=0}^{q-1} exp(2 pi i (k m + p m^2) / q)``; ``weyl_scan`` measures
the dyadic Weyl sums ``sup_x |sum_n chi_j(n) exp(i n^2 t + i n x)|``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .contfrac import Convergent
from .phase import RationalTime, quadratic_phase

MAX_Q = 10 ** 6
DEFAULT_C1 = 16.0


@dataclass(frozen=True, eq=False)
class GaussWeights:
    p: int
    q: int
    W: np.ndarray = field(repr=False)

    def check_invariants(self, atol: float = 1e-10):
        """``sum W_k = q`` and ``sum |W_k|^2 = q^2``."""
        tol = atol * max(1, self.q) ** 2
        assert abs(self.W.sum() - self.q) <= tol, "sum of weights differs from q"
        assert abs(np.sum(np.abs(self.W) ** 2) - self.q ** 2) <= tol, "Parseval identity fails"


def gauss_weights(p: int, q: int) -> GaussWeights:
    """Revival weights with exponents reduced mod ``q`` in integers.

    The inner sums ``exp(2 pi i p m^2 / q)`` use exact residues; the sum over
    ``m`` against ``exp(2 pi i k m / q)`` is a length-``q`` DFT.
    """
    p, q = int(p), int(q)
    if q < 1:
        raise ValueError("q must be positive")
    if q > MAX_Q:
        raise ValueError(f"q = {q} exceeds the cost guard {MAX_Q}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    p %= q
    m = np.arange(q, dtype=np.int64)
    g = np.exp(2j * np.pi * (np.mod(np.mod(m * m, q) * p, q) / q))
    W = q * np.fft.ifft(g)
    gw = GaussWeights(p, q, W)
    gw.check_invariants(atol=1e-9)
    return gw


def gauss_weights_direct(p: int, q: int) -> np.ndarray:
    """O(q^2) evaluation with the full exponent ``k m + p m^2`` reduced mod q."""
    k = np.arange(q, dtype=np.int64)[:, None]
    m = np.arange(q, dtype=np.int64)[None, :]
    e = np.mod(k * m + p * np.mod(m * m, q), q)
    return np.exp(2j * np.pi * e / q).sum(axis=1)


def total_variation(weights) -> float:
    """``sum |w_{n+1} - w_n|`` of the zero-extended sequence."""
    w = np.concatenate([[0.0], np.asarray(weights, dtype=float), [0.0]])
    return float(np.abs(np.diff(w)).sum())


def incomplete_weighted_sum_bound(M: int, N: int, weights, a_approx: Convergent,
                                  c1: float = DEFAULT_C1) -> float:
    """Summation-by-parts bound ``d c1 ((N - M)/sqrt(q) + sqrt(q))``.

    ``weights[n]`` is the weight of frequency ``n`` (indexed from 0) and must
    vanish outside ``[M, N]``; ``q`` is the denominator of ``a_approx``.
    """
    if not 0 < M < N:
        raise ValueError("need 0 < M < N")
    w = np.asarray(weights, dtype=float)
    n = np.arange(w.size)
    if np.any(w[(n < M) | (n > N)] != 0):
        raise ValueError(f"weights supported outside [{M}, {N}]")
    d = total_variation(w)
    sq = math.sqrt(a_approx.q)
    return d * c1 * ((N - M) / sq + sq)


def weighted_quadratic_sum(weights, a: float, b: float) -> complex:
    """Direct ``sum_n w_n exp(2 pi i (a n^2 + b n))``."""
    w = np.asarray(weights, dtype=float)
    n = np.arange(w.size, dtype=float)
    turns = np.mod(a * n * n, 1.0) + np.mod(b * n, 1.0)
    return complex(np.sum(w * np.exp(2j * np.pi * turns)))


def calibrate_c1(trials: int = 10_000, M: int = 16, N: int = 64, seed: int = 0,
                 a_target: float = (1 + 5 ** 0.5) / 2, approx: Convergent | None = None) -> float:
    """Smallest power of two ``c1`` for which the bound dominates every random trial.

    Each trial draws a random Lipschitz weight on ``[M, N]`` (a clipped random
    walk) and a random linear coefficient ``b``.
    """
    from fractions import Fraction

    if approx is None:
        approx = Convergent(13, 8, Fraction(a_target))
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        w = np.zeros(N + 1)
        steps = rng.uniform(-1, 1, N - M + 1) / (N - M)
        w[M:] = np.clip(np.cumsum(steps) + rng.uniform(0, 1), 0, 1)
        b = rng.uniform(0, 1)
        actual = abs(weighted_quadratic_sum(w, a_target, b))
        unit = incomplete_weighted_sum_bound(M, N, w, approx, c1=1.0)
        if unit > 0:
            worst = max(worst, actual / unit)
    return 2.0 ** max(0, math.ceil(math.log2(worst))) if worst > 0 else 1.0


@dataclass(frozen=True)
class WeylRecord:
    j: int
    S: float
    ratio: float


@dataclass(frozen=True)
class WeylScanReport:
    t: object
    delta: float
    C: float
    records: tuple

    @property
    def ratios(self) -> np.ndarray:
        return np.array([r.ratio for r in self.records])

    @property
    def max_ratio(self) -> float:
        return float(self.ratios.max())

    @property
    def passed(self) -> bool:
        return self.max_ratio <= self.C


def dyadic_weyl_sup(bank, j: int, t, x_resolution: int, method: str = "fft") -> float:
    """``max_m |sum_n chi_j(n) exp(i n^2 t + i n x_m)|`` on ``x_m = 2 pi m / R``."""
    lo, hi = (0, 1) if j == 0 else (2 ** (j - 1), 2 ** (j + 1))
    n = np.arange(lo, hi + 1)
    c = bank.chi(j, n) * quadratic_phase(n, t)
    keep = c != 0
    n, c = n[keep], c[keep]
    if n.size == 0:
        return 0.0
    if method == "fft":
        if x_resolution <= n.max():
            raise ValueError("x_resolution must exceed the top frequency")
        dense = np.zeros(x_resolution, dtype=complex)
        dense[n] = c
        values = x_resolution * np.fft.ifft(dense)
    elif method == "direct":
        x = 2 * np.pi * np.arange(x_resolution) / x_resolution
        values = np.concatenate([np.exp(1j * np.outer(x[s:s + 1024], n)) @ c
                                 for s in range(0, x_resolution, 1024)])
    else:
        raise ValueError(f"unknown method {method!r}")
    return float(np.abs(values).max())


def weyl_scan(t, delta: float, j_min: int, j_max: int, lp_bank, x_resolution: int,
              C: float = 4.0, method: str = "fft") -> WeylScanReport:
    """Ratios ``S_j 2^(-j (1 + delta)/2)`` for ``j`` in ``[j_min, j_max]``.

    ``t`` is a float or a :class:`~revlab.phase.RationalTime`. The scan passes
    when every ratio is at most ``C``; a failure is an outcome, not an error.
    """
    if j_max > 14:
        raise ValueError("j_max is limited to 14")
    if x_resolution < 2 ** (j_max + 2):
        raise ValueError("x_resolution must be at least 2^(j_max + 2)")
    records = []
    for j in range(j_min, j_max + 1):
        S = dyadic_weyl_sup(lp_bank, j, t, x_resolution, method)
        records.append(WeylRecord(j, S, S * 2.0 ** (-j * (1 + delta) / 2)))
    return WeylScanReport(t, delta, C, tuple(records))


def time_label(t) -> str:
    return f"2pi*{t}" if isinstance(t, RationalTime) else repr(t)
