"""Fourier-side representation of periodic functions on the torus (-pi, pi].

Coefficient scaling used throughout the package::

    c(n) = (1 / 2pi) * integral_{-pi}^{pi} exp(-i n y) f(y) dy

so that ``f(x) = sum_n c(n) exp(i n x)``. A :class:`FourierSeries` stores the
window ``n = -N..N`` in increasing order of ``n``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

HERMITIAN_RTOL = 1e-14


@dataclass(frozen=True)
class TorusGrid:
    """Uniform grid of ``M`` nodes on (-pi, pi].

    Nodes are ``x_m = -pi + offset + m * 2pi/M``. With ``offset == 0`` the
    node at -pi is identified with +pi, so the grid is listed as
    ``-pi + (m + 1) * 2pi/M``.
    """

    M: int
    offset: float = 0.0

    def __post_init__(self):
        if int(self.M) != self.M or self.M < 1:
            raise ValueError(f"grid size must be a positive integer, got {self.M!r}")
        if not 0.0 <= self.offset < 2 * np.pi / self.M:
            raise ValueError("offset must lie in [0, 2pi/M)")

    @classmethod
    def midpoint(cls, M: int) -> "TorusGrid":
        """Grid shifted by half a cell, ``x_m = -pi + (m + 1/2) * 2pi/M``."""
        return cls(M, np.pi / M)

    @property
    def spacing(self) -> float:
        return 2 * np.pi / self.M

    @property
    def start(self) -> float:
        return -np.pi + (self.offset if self.offset > 0 else self.spacing)

    @property
    def nodes(self) -> np.ndarray:
        return self.start + self.spacing * np.arange(self.M)


@dataclass(frozen=True, eq=False)
class FourierSeries:
    """Immutable window of Fourier coefficients ``c(-N), ..., c(N)``.

    ``real=True`` asserts Hermitian symmetry ``c(-n) = conj(c(n))``; the flag
    is checked once here and trusted afterwards.
    """

    coeffs: np.ndarray
    real: bool = True
    N: int = field(init=False)

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.ndim != 1 or c.size < 3 or c.size % 2 == 0:
            raise ValueError("coefficient array must have odd length 2N+1 with N >= 1")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "N", (c.size - 1) // 2)
        if self.real:
            scale = max(np.abs(c).max(), np.finfo(float).tiny)
            if np.abs(c - np.conj(c[::-1])).max() > HERMITIAN_RTOL * scale:
                raise ValueError("series flagged real is not Hermitian symmetric")

    @classmethod
    def from_function(cls, coefficient, N: int, real: bool = True) -> "FourierSeries":
        """Build from a vectorised ``coefficient(n)`` callable."""
        return cls(coefficient(np.arange(-N, N + 1)), real=real)

    @classmethod
    def zeros(cls, N: int) -> "FourierSeries":
        return cls(np.zeros(2 * N + 1), real=True)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.N, self.N + 1)

    def __getitem__(self, n: int) -> complex:
        if abs(n) > self.N:
            return 0j
        return complex(self.coeffs[n + self.N])

    def with_coeffs(self, coeffs, real: bool | None = None) -> "FourierSeries":
        return FourierSeries(coeffs, real=self.real if real is None else real)

    def apply_multiplier(self, symbol, real: bool | None = None) -> "FourierSeries":
        """Return the series with ``c(n)`` replaced by ``symbol[n] * c(n)``."""
        return self.with_coeffs(np.asarray(symbol) * self.coeffs, real=real)

    def truncate(self, N: int) -> "FourierSeries":
        if N > self.N:
            pad = np.zeros(N - self.N, dtype=complex)
            return self.with_coeffs(np.concatenate([pad, self.coeffs, pad]))
        return self.with_coeffs(self.coeffs[self.N - N:self.N + N + 1])

    def __add__(self, other: "FourierSeries") -> "FourierSeries":
        N = max(self.N, other.N)
        a, b = self.truncate(N), other.truncate(N)
        return FourierSeries(a.coeffs + b.coeffs, real=self.real and other.real)

    def __neg__(self) -> "FourierSeries":
        return self.with_coeffs(-self.coeffs)

    def __sub__(self, other: "FourierSeries") -> "FourierSeries":
        return self + (-other)

    def to_json(self) -> str:
        return json.dumps({"N": self.N, "re": self.coeffs.real.tolist(),
                           "im": self.coeffs.imag.tolist()})

    @classmethod
    def from_json(cls, text: str, real: bool | None = None) -> "FourierSeries":
        data = json.loads(text)
        c = np.asarray(data["re"], dtype=float) + 1j * np.asarray(data["im"], dtype=float)
        if c.size != 2 * data["N"] + 1:
            raise ValueError("JSON series length does not match N")
        if real is None:
            real = bool(np.allclose(c, np.conj(c[::-1]), rtol=0,
                                    atol=HERMITIAN_RTOL * max(np.abs(c).max(), 1e-300)))
        return cls(c, real=real)


def _evaluate_fft(series: FourierSeries, grid: TorusGrid) -> np.ndarray:
    # alias frequencies onto M bins; exact for any M
    n = series.indices
    M = grid.M
    shift = grid.start + np.pi
    phased = series.coeffs * np.where(n % 2 == 0, 1.0, -1.0) * np.exp(1j * n * shift)
    bins = n % M
    folded = (np.bincount(bins, weights=phased.real, minlength=M)
              + 1j * np.bincount(bins, weights=phased.imag, minlength=M))
    return M * np.fft.ifft(folded)


def _evaluate_direct(series: FourierSeries, x: np.ndarray, chunk: int = 2048) -> np.ndarray:
    n = series.indices
    out = np.empty(x.size, dtype=complex)
    for start in range(0, x.size, chunk):
        xs = x[start:start + chunk]
        out[start:start + chunk] = np.exp(1j * np.outer(xs, n)) @ series.coeffs
    return out


def evaluate_complex(series: FourierSeries, grid: TorusGrid, method: str = "fft") -> np.ndarray:
    """Partial sum ``sum_n c(n) exp(i n x)`` at every grid node."""
    if method == "fft":
        return _evaluate_fft(series, grid)
    if method == "direct":
        return _evaluate_direct(series, grid.nodes)
    raise ValueError(f"unknown evaluation method {method!r}")


def evaluate_at(series: FourierSeries, x) -> np.ndarray:
    """Complex partial sum at arbitrary points by direct summation."""
    return _evaluate_direct(series, np.atleast_1d(np.asarray(x, dtype=float)))


def evaluate(series: FourierSeries, grid: TorusGrid, method: str = "fft") -> np.ndarray:
    """Real values of a real-flagged series on ``grid``.

    The imaginary residual of the summation is checked against
    ``1e-10 * sum |c(n)|``.
    """
    if not series.real:
        raise ValueError("evaluate requires a real-flagged series; use evaluate_complex")
    values = evaluate_complex(series, grid, method)
    bound = 1e-10 * max(np.abs(series.coeffs).sum(), 1.0)
    residual = np.abs(values.imag).max()
    if residual > bound:
        raise ArithmeticError(f"imaginary residual {residual:.3e} exceeds {bound:.3e}")
    return values.real


def hilbert(series: FourierSeries) -> FourierSeries:
    """Periodic Hilbert transform, the multiplier ``-i sgn(n)``."""
    return series.apply_multiplier(-1j * np.sign(series.indices))


def szego_project(series: FourierSeries) -> FourierSeries:
    """Keep the non-negative frequencies. The result is not real-flagged."""
    return series.apply_multiplier((series.indices >= 0).astype(float), real=False)


def mean_project(series: FourierSeries) -> FourierSeries:
    return series.apply_multiplier((series.indices == 0).astype(float))


def derivative(series: FourierSeries) -> FourierSeries:
    return series.apply_multiplier(1j * series.indices)


def l2_norm(series: FourierSeries) -> float:
    """L2(T) norm via Parseval: ``sqrt(2pi * sum |c(n)|^2)``."""
    return float(np.sqrt(2 * np.pi * np.sum(np.abs(series.coeffs) ** 2)))


def grid_l2_distance(u, v, grid: TorusGrid) -> float:
    """Riemann-sum L2 distance between two sampled functions."""
    d = np.asarray(u) - np.asarray(v)
    return float(np.sqrt(grid.spacing * np.sum(np.abs(d) ** 2)))
