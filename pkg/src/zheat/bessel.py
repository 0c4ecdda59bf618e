"""Modified Bessel functions I_n and the lattice heat kernel.

The workhorse is the exponentially scaled value e^{-x} I_n(x), computed by
a power series for small arguments and by Miller's backward recurrence,
normalized with the generating identity e^x = I_0 + 2*sum I_n, for large
ones.  The unscaled value is a thin wrapper that refuses arguments where
e^x overflows.  A cosine-integral evaluation is kept as an independent
cross-check path.

The heat kernel of the second-difference Laplacian is
G(n, t) = e^{-2t} I_n(2t); its time derivative follows from the Bessel
recurrence, dG/dt = G(n-1) + G(n+1) - 2 G(n), and is computed that way
rather than by finite differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import theta_rule

_SERIES_X_MAX = 30.0
_RAW_X_MAX = 700.0  # e^x overflows shortly after this
_RESCALE = 1e250
_RESCALE_INV = 1e-250


def _miller_start(n: int, x: float) -> int:
    # the start order must cover both the target order (plus a relaxation
    # margin for the seeded ratio) and every order that still contributes
    # to the normalization sum, roughly 8.85*sqrt(x) of them
    spread = int(math.ceil(8.85 * math.sqrt(x)))
    return max(n, spread) + 15 + int(math.ceil(2.2 * math.sqrt(max(n, 1) * x)))


def _series_scaled_scalar(n: int, x: float) -> float:
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    half = 0.5 * x
    log_pref = n * math.log(half) - math.lgamma(n + 1) - x
    if log_pref < -745.0:
        return 0.0
    q = half * half
    term = 1.0
    total = 1.0
    for k in range(1, 400):
        term *= q / (k * (n + k))
        total += term
        if term < 1e-18 * total:
            break
    return math.exp(log_pref) * total


def _miller_scaled_scalar(n: int, x: float) -> float:
    m = _miller_start(n, x)
    ip1 = 0.0
    cur = 1e-300
    acc = 2e-300
    target = 0.0
    target_scale = 0
    scale = 0
    for k in range(m, 0, -1):
        im1 = ip1 + (2.0 * k / x) * cur
        if k - 1 == n:
            target = im1
            target_scale = scale
        acc += im1 if k - 1 == 0 else 2.0 * im1
        if im1 > _RESCALE:
            im1 *= _RESCALE_INV
            cur *= _RESCALE_INV
            acc *= _RESCALE_INV
            if k - 1 == n:
                target *= _RESCALE_INV
            scale += 1
        ip1, cur = cur, im1
    if target_scale == scale:
        return target / acc
    return (target / acc) * _RESCALE_INV ** (scale - target_scale)


def bessel_i_scaled(n: int, x: float) -> float:
    """Exponentially scaled modified Bessel function e^{-x} I_n(x), x >= 0."""
    n = abs(int(n))
    x = float(x)
    if x < 0.0:
        raise ValueError("argument must be nonnegative")
    if x <= _SERIES_X_MAX:
        return _series_scaled_scalar(n, x)
    return _miller_scaled_scalar(n, x)


def bessel_i(n: int, x: float) -> float:
    """Modified Bessel function I_n(x).  Errors where e^x overflows."""
    x = float(x)
    if x > _RAW_X_MAX:
        raise OverflowError(
            f"I_n({x:g}) overflows double precision; use bessel_i_scaled")
    return bessel_i_scaled(n, x) * math.exp(x)


def bessel_i_series(n: int, x: float) -> float:
    """Power-series evaluation of e^{-x} I_n(x); independent of Miller."""
    n = abs(int(n))
    if x < 0.0:
        raise ValueError("argument must be nonnegative")
    return _series_scaled_scalar(n, float(x))


def bessel_i_cosine_integral(n: int, x: float) -> float:
    """Cosine-integral evaluation (1/pi) * int_0^pi e^{x(cos a - 1)} cos(n a) da.

    Equals e^{-x} I_n(x).  Accuracy is limited by the cancellation in the
    oscillatory integral, so this path is a cross-check, not a primitive.
    """
    n = abs(int(n))
    rule = theta_rule(osc=float(n), t_max=max(float(x), 1.0) / 2.0)
    a = rule.nodes
    vals = np.exp(-2.0 * float(x) * np.sin(0.5 * a) ** 2) * np.cos(n * a)
    return float(rule.integrate(vals)) / math.pi


def _series_scaled_rows(n_max: int, x: float) -> np.ndarray:
    """e^{-x} I_n(x) for n = 0..n_max at one small argument x <= 30."""
    if x == 0.0:
        out = np.zeros(n_max + 1)
        out[0] = 1.0
        return out
    half = 0.5 * x
    n = np.arange(n_max + 1, dtype=float)
    with np.errstate(divide="ignore"):
        log_pref = n * math.log(half) - np.array(
            [math.lgamma(k + 1) for k in range(n_max + 1)]) - x
    # prefactor via cumulative product keeps full relative precision where
    # the value is representable; the lgamma form only gates underflow
    pref = np.ones(n_max + 1)
    if n_max >= 1:
        with np.errstate(under="ignore"):
            pref[1:] = np.cumprod(half / np.arange(1, n_max + 1))
    pref *= math.exp(-x)
    q = half * half
    term = np.ones(n_max + 1)
    total = np.ones(n_max + 1)
    for k in range(1, 400):
        term *= q / (k * (n + k))
        total += term
        if term.max() < 1e-18:
            break
    out = pref * total
    out[log_pref < -745.0] = 0.0
    return out


def _miller_scaled_block(n_max: int, x: np.ndarray) -> np.ndarray:
    """e^{-x} I_n(x) rows n = 0..n_max for a vector of arguments x > 0."""
    x = np.asarray(x, dtype=float)
    ncol = x.size
    m = _miller_start(n_max, float(x.max()))
    raw = np.zeros((n_max + 1, ncol))
    snap = np.zeros((n_max + 1, ncol), dtype=np.int32)
    counts = np.zeros(ncol, dtype=np.int32)
    ip1 = np.zeros(ncol)
    cur = np.full(ncol, 1e-300)
    acc = np.full(ncol, 2e-300)
    inv_x = 1.0 / x
    for k in range(m, 0, -1):
        im1 = ip1 + (2.0 * k) * inv_x * cur
        if k - 1 <= n_max:
            raw[k - 1] = im1
            snap[k - 1] = counts
        acc += im1 if k == 1 else 2.0 * im1
        big = im1 > _RESCALE
        if big.any():
            im1 = np.where(big, im1 * _RESCALE_INV, im1)
            cur = np.where(big, cur * _RESCALE_INV, cur)
            acc = np.where(big, acc * _RESCALE_INV, acc)
            counts += big
        ip1, cur = cur, im1
    shift = (counts[None, :] - snap).astype(float)
    with np.errstate(under="ignore"):
        out = raw * np.power(_RESCALE_INV, shift) / acc[None, :]
    return out


def bessel_i_scaled_table(n_max: int, x: np.ndarray,
                          chunk: int = 512) -> np.ndarray:
    """Table of e^{-x} I_n(x), rows n = 0..n_max, columns the grid x."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise ValueError("arguments must be nonnegative")
    out = np.empty((n_max + 1, x.size))
    small = x <= _SERIES_X_MAX
    for j in np.nonzero(small)[0]:
        out[:, j] = _series_scaled_rows(n_max, float(x[j]))
    idx = np.nonzero(~small)[0]
    # chunk columns in argument order so each Miller pass shares a start order
    for start in range(0, idx.size, chunk):
        cols = idx[start:start + chunk]
        out[:, cols] = _miller_scaled_block(n_max, x[cols])
    return out


# -- heat kernel --------------------------------------------------------------


def heat_kernel(n: int, t: float) -> float:
    """Heat kernel G(n, t) = e^{-2t} I_n(2t) of the lattice Laplacian."""
    if t <= 0.0:
        raise ValueError("time must be positive")
    return bessel_i_scaled(n, 2.0 * t)


def heat_kernel_dt(n: int, t: float) -> float:
    """dG/dt at (n, t), via the Bessel recurrence: G(n-1) + G(n+1) - 2 G(n)."""
    if t <= 0.0:
        raise ValueError("time must be positive")
    n = abs(int(n))
    x = 2.0 * t
    gm1 = bessel_i_scaled(abs(n - 1), x)
    gp1 = bessel_i_scaled(n + 1, x)
    g = bessel_i_scaled(n, x)
    return gm1 + gp1 - 2.0 * g


def heat_kernel_rows(n_max: int, t: np.ndarray) -> np.ndarray:
    """G(n, t) for n = 0..n_max over a time grid (one column per t)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(t <= 0.0):
        raise ValueError("times must be positive")
    return bessel_i_scaled_table(n_max, 2.0 * t)


def mass_radius(t: float) -> int:
    """Truncation radius containing all but a negligible kernel mass."""
    return int(math.ceil(4.0 * t + 10.0 * math.sqrt(t + 1.0) + 20.0))


def mass_tail_bound(radius: int, t: float) -> float:
    """Chernoff bound on sum_{|n| > radius} G(n, t).

    The two-sided generating function gives sum_n G(n,t) e^{sn}
    = exp(2t(cosh s - 1)); optimizing e^{-sN} exp(2t(cosh s - 1)) over
    s > 0 lands at s = asinh(N / 2t).
    """
    if t <= 0.0:
        raise ValueError("time must be positive")
    n = float(radius)
    s = math.asinh(n / (2.0 * t))
    exponent = 2.0 * t * (math.cosh(s) - 1.0) - s * n
    return 2.0 * math.exp(min(exponent, 700.0))


def certified_radius(t: float, tol: float) -> int:
    """Smallest policy radius whose Chernoff tail bound is below tol."""
    r = mass_radius(t)
    while mass_tail_bound(r, t) > tol:
        r = int(r * 1.25) + 8
    return r


@dataclass(frozen=True)
class HeatKernelTable:
    """Cached heat-kernel values over an (n, t) window.

    Rows are n = 0..n_max (the kernel is even in n), columns the time
    grid.  ``dG`` holds the time derivative obtained from the recurrence,
    and ``tail_bound[j]`` certifies the mass left outside n_max at t[j].
    """

    n_max: int
    t: np.ndarray
    G: np.ndarray
    dG: np.ndarray
    tail_bound: np.ndarray

    @classmethod
    def build(cls, n_max: int, t: np.ndarray) -> "HeatKernelTable":
        t = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(np.diff(t) <= 0):
            raise ValueError("time grid must be strictly increasing")
        rows = heat_kernel_rows(n_max + 1, t)
        g = rows[:n_max + 1]
        dg = np.empty_like(g)
        dg[0] = 2.0 * rows[1] - 2.0 * rows[0]
        dg[1:] = rows[:n_max] + rows[2:n_max + 2] - 2.0 * rows[1:n_max + 1]
        tail = np.array([mass_tail_bound(n_max, tj) for tj in t])
        return cls(n_max=n_max, t=t, G=g, dG=dg, tail_bound=tail)

    def value(self, n: int, j: int) -> float:
        return float(self.G[abs(n), j])

    def mass(self, j: int) -> float:
        """Total mass sum_{|n| <= n_max} G(n, t_j)."""
        return float(self.G[0, j] + 2.0 * self.G[1:, j].sum())

    def to_csv(self, path) -> None:
        with open(path, "w") as fh:
            fh.write("n,t,G,dG\n")
            for i in range(self.n_max + 1):
                for j, tj in enumerate(self.t):
                    fh.write(f"{i},{tj!r},{self.G[i, j]!r},{self.dG[i, j]!r}\n")
