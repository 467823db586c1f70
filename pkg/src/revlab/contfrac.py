"""Continued fractions, convergents and Dirichlet/Khinchin-Levy diagnostics.

Targets are held as exact :class:`fractions.Fraction` values so that gaps
``|x - p/q|`` far below double precision are computed without cancellation.
Three kinds of target are accepted:

* the built-in constants ``"phi"`` and ``"e"`` (64-digit literals);
* decimal strings and ``Fraction`` objects, taken as exact rationals;
* floats, expanded through their exact binary value (depth at most 40).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .errors import DepthInsufficientError, PrecisionExhaustedError

PHI_DIGITS = "1.618033988749894848204586834365638117720309179805762862135448623"
E_DIGITS = "2.718281828459045235360287471352662497757247093699959574966967628"
CONSTANTS = {"phi": PHI_DIGITS, "e": E_DIGITS}

LEVY_RHO = math.pi ** 2 / (12 * math.log(2))
FLOAT_MAX_DEPTH = 40
_FLOAT_RELIABLE_Q = 2 ** 26
_INT64_MAX = 2 ** 63 - 1


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int
    target: Fraction

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def gap(self) -> float:
        return float(abs(self.target - self.value))

    def to_dict(self) -> dict:
        if max(abs(self.p), self.q) > _INT64_MAX:
            raise OverflowError(f"convergent {self.p}/{self.q} does not fit in 64 bits")
        return {"p": self.p, "q": self.q, "gap": self.gap}


@dataclass(frozen=True)
class CFExpansion:
    partial_quotients: tuple
    convergents: tuple
    target: Fraction

    def __len__(self):
        return len(self.convergents)

    def __getitem__(self, n) -> Convergent:
        return self.convergents[n]


def as_target(x) -> tuple[Fraction, int | None]:
    """Exact value of ``x`` and the number of trustworthy digits (``None`` if exact)."""
    if isinstance(x, str):
        key = x.strip().lower()
        if key in CONSTANTS:
            digits = CONSTANTS[key]
            return Fraction(Decimal(digits)), len(digits) - 2
        try:
            return Fraction(Decimal(x.strip())), None
        except ArithmeticError:
            raise ValueError(f"cannot parse target {x!r}") from None
    if isinstance(x, (Fraction, int, Decimal)):
        return Fraction(x), None
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError("target must be finite")
        return Fraction(x), 15
    raise TypeError(f"unsupported target type {type(x).__name__}")


def gap(conv: Convergent) -> float:
    return conv.gap


def expand(x, depth: int) -> CFExpansion:
    """Partial quotients ``a_0; a_1, ..., a_depth`` and their convergents.

    The Gauss map runs in exact rational arithmetic; the expansion stops early
    only when the target is rational. Convergents follow the integer
    recurrences ``p_n = a_n p_{n-1} + p_{n-2}``.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if isinstance(x, float) and depth > FLOAT_MAX_DEPTH:
        raise ValueError(f"depth for float targets is capped at {FLOAT_MAX_DEPTH}")
    target, digits = as_target(x)
    if target <= 0:
        raise ValueError("target must be positive")

    quotients, convs = [], []
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    r = target
    for _ in range(depth + 1):
        a = math.floor(r)
        quotients.append(a)
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        convs.append(Convergent(p, q, target))
        frac = r - a
        if frac == 0:
            break
        r = 1 / frac

    n_found = len(quotients) - 1
    if isinstance(x, float) and n_found < depth and q > _FLOAT_RELIABLE_Q:
        raise PrecisionExhaustedError(
            f"float target exhausted after {n_found} partial quotients (binary rounding)")
    if digits is not None and not isinstance(x, float):
        # a literal with d digits determines convergents while q^2 < 10^d
        for n, c in enumerate(convs):
            if 2 * math.log10(c.q) > digits - 2:
                raise PrecisionExhaustedError(
                    f"{digits}-digit literal cannot certify convergent {n} (q={c.q})")
    for c in convs:
        assert c.gap <= 1.0 / c.q ** 2, f"Dirichlet certificate failed for {c}"
    return CFExpansion(tuple(quotients), tuple(convs), target)


def levy_rate(cf: CFExpansion) -> float:
    """``log(q_n) / n`` at the deepest available ``n``."""
    if len(cf) < 10:
        raise ValueError("levy_rate needs at least 10 convergents")
    n = len(cf) - 1
    return math.log(cf[n].q) / n


@dataclass(frozen=True)
class ScaleChoice:
    index: int
    convergent: Convergent
    r: float


def select_for_scale(cf: CFExpansion, j: int, rho: float = LEVY_RHO) -> ScaleChoice:
    """Convergent at ``n(j) = floor(j log 2 / rho)`` so that ``q ~ 2^(j (1 + r_j))``.

    Indices below 1 are clamped to 1. Successive ``j`` may select the same
    index because ``log 2 / rho < 1``.
    """
    if j < 1:
        raise ValueError("scale j must be positive")
    n = max(1, math.floor(j * math.log(2) / rho))
    if n >= len(cf):
        raise DepthInsufficientError(
            f"scale j={j} needs convergent {n}, expansion has {len(cf)}")
    conv = cf[n]
    r = math.log2(conv.q) / j - 1 if conv.q > 0 else -1.0
    return ScaleChoice(n, conv, r)
