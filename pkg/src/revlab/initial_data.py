"""Piecewise-constant initial data and their exact Hilbert transforms."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularPointError
from .series import FourierSeries, TorusGrid

SINGULAR_TOL = 1e-300
BREAKPOINT_TOL = 1e-12


class SignedInfinity(enum.Enum):
    """Value of a logarithmic cusp at its own singular point."""

    PLUS = 1
    MINUS = -1

    def __float__(self):
        return math.inf * self.value


def wrap(x):
    """Map angles into (-pi, pi]."""
    y = np.mod(np.asarray(x, dtype=float) + np.pi, 2 * np.pi) - np.pi
    return np.where(y == -np.pi, np.pi, y)


@dataclass(frozen=True)
class PiecewiseConstant:
    """Step function on the torus.

    ``values[j]`` holds on ``(breakpoints[j-1], breakpoints[j]]``, read
    cyclically, so ``values[0]`` covers the arc that wraps through -pi.
    """

    breakpoints: tuple
    values: tuple

    def __post_init__(self):
        a = tuple(float(v) for v in self.breakpoints)
        v = tuple(float(w) for w in self.values)
        if len(a) < 1 or len(a) != len(v):
            raise ValueError("need as many values as breakpoints, at least one")
        if any(not -np.pi < x <= np.pi for x in a):
            raise ValueError("breakpoints must lie in (-pi, pi]")
        if any(x >= y for x, y in zip(a, a[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        object.__setattr__(self, "breakpoints", a)
        object.__setattr__(self, "values", v)

    @classmethod
    def indicator(cls, a: float, b: float) -> "PiecewiseConstant":
        """Indicator of the arc [a, b] with -pi < a < b <= pi."""
        return cls((a, b), (0.0, 1.0))

    @classmethod
    def canonical(cls) -> "PiecewiseConstant":
        """The demo datum: indicator of [-pi/2, pi/2]."""
        return cls.indicator(-np.pi / 2, np.pi / 2)

    @classmethod
    def parse(cls, text: str) -> "PiecewiseConstant":
        """Parse ``indicator:a,b`` or ``step:a1=v1,a2=v2,...``."""
        kind, _, body = text.partition(":")
        try:
            if kind == "indicator":
                a, b = (float(s) for s in body.split(","))
                return cls.indicator(a, b)
            if kind == "step":
                pairs = [item.split("=") for item in body.split(",")]
                return cls(tuple(float(p) for p, _ in pairs), tuple(float(v) for _, v in pairs))
        except ValueError as exc:
            raise ValueError(f"malformed initial condition {text!r}: {exc}") from None
        raise ValueError(f"unknown initial condition kind {kind!r}")

    @property
    def jumps(self) -> np.ndarray:
        """Jump across each breakpoint: value on the right minus value on the left."""
        v = np.asarray(self.values)
        return np.roll(v, -1) - v

    @property
    def total_variation(self) -> float:
        return float(np.abs(self.jumps).sum())

    @property
    def arc_lengths(self) -> np.ndarray:
        a = np.asarray(self.breakpoints)
        return np.diff(np.concatenate([[a[-1] - 2 * np.pi], a]))

    @property
    def mean(self) -> float:
        return float(np.dot(self.values, self.arc_lengths) / (2 * np.pi))

    def __call__(self, x):
        x = wrap(x)
        idx = np.searchsorted(self.breakpoints, x, side="left")
        idx = np.where(idx == len(self.breakpoints), 0, idx)
        return np.asarray(self.values)[idx]

    def to_string(self) -> str:
        return "step:" + ",".join(f"{a!r}={v!r}" for a, v in zip(self.breakpoints, self.values))


def fourier_coefficients(f: PiecewiseConstant, n) -> np.ndarray:
    """Exact coefficients ``(1/2pi) int exp(-i n y) f(y) dy`` for integer array ``n``."""
    n = np.asarray(n)
    a = np.asarray(f.breakpoints)
    with np.errstate(divide="ignore", invalid="ignore"):
        phases = np.exp(-1j * np.multiply.outer(n, a))
        c = phases @ f.jumps / (2j * np.pi * n)
    return np.where(n == 0, f.mean, c)


def fourier_coefficient(f: PiecewiseConstant, n: int) -> complex:
    return complex(fourier_coefficients(f, np.array([n]))[0])


def to_series(f: PiecewiseConstant, N: int) -> FourierSeries:
    """Truncation of ``f`` to ``|n| <= N``."""
    c = fourier_coefficients(f, np.arange(-N, N + 1))
    # enforce exact Hermitian symmetry against rounding in the phases
    c = 0.5 * (c + np.conj(c[::-1]))
    return FourierSeries(c, real=True)


def truncation_tail(f: PiecewiseConstant, N: int, cutoff: int = 1 << 22) -> float:
    """``(2pi * sum_{|n|>N} |c(n)|^2)^(1/2)``, the L2 norm of ``f - S_N f``.

    The sum is taken exactly up to ``cutoff`` and the remainder is bounded
    by the BV decay ``|c(n)| <= TV / (2pi |n|)``.
    """
    total = 0.0
    for start in range(N + 1, cutoff + 1, 1 << 18):
        n = np.arange(start, min(start + (1 << 18), cutoff + 1))
        total += 2 * np.sum(np.abs(fourier_coefficients(f, n)) ** 2)
    total += 2 * (f.total_variation / (2 * np.pi)) ** 2 / cutoff
    return float(np.sqrt(2 * np.pi * total))


def hilbert_closed_form(a: float, b: float, x: float):
    """Hilbert transform of the indicator of [a, b] at ``x``.

    Returns ``(1/pi) log|sin((x-a)/2) / sin((x-b)/2)|``, or a
    :class:`SignedInfinity` when ``x`` sits on an endpoint (mod 2pi): the
    cusp tends to -inf at ``a`` and to +inf at ``b``.
    """
    if not -np.pi <= a < b < np.pi:
        raise ValueError("need -pi <= a < b < pi")
    sa = abs(math.sin((x - a) / 2))
    sb = abs(math.sin((x - b) / 2))
    if sa < SINGULAR_TOL and sb < SINGULAR_TOL:
        raise SingularPointError("both endpoints coincide with x")
    if sa < SINGULAR_TOL:
        return SignedInfinity.MINUS
    if sb < SINGULAR_TOL:
        return SignedInfinity.PLUS
    return math.log(sa / sb) / math.pi


def log_sine_kernel(x, breakpoints, jumps) -> np.ndarray:
    """``(1/pi) sum_j jump_j log|sin((x - a_j)/2)|`` for a flat array ``x``."""
    x = np.asarray(x, dtype=float)
    out = np.zeros(x.shape)
    for a, jump in zip(breakpoints, jumps):
        if jump != 0.0:
            out += jump * np.log(np.abs(np.sin(0.5 * (x - a))))
    return out / np.pi


def check_clear_of_breakpoints(f: PiecewiseConstant, x, tol: float = BREAKPOINT_TOL):
    x = np.asarray(x, dtype=float)
    for a, jump in zip(f.breakpoints, f.jumps):
        if jump == 0.0:
            continue
        dist = np.abs(wrap(x - a))
        if dist.min() < tol:
            where = float(np.ravel(x)[np.argmin(dist)])
            raise SingularPointError(f"evaluation point {where!r} hits breakpoint {a!r}")


def hilbert_at(f: PiecewiseConstant, x) -> np.ndarray:
    """Exact ``Hf`` at arbitrary points away from the breakpoints."""
    check_clear_of_breakpoints(f, x)
    return log_sine_kernel(x, f.breakpoints, f.jumps)


def hilbert_piecewise(f: PiecewiseConstant, grid: TorusGrid) -> np.ndarray:
    """Exact ``Hf`` on the grid nodes, by linearity of the closed form."""
    return hilbert_at(f, grid.nodes)
