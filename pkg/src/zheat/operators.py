"""Operators built from the heat semigroup on finitely supported sequences.

Everything here is a convolution against cached heat-kernel data: the
semigroup itself, its supremum over a time grid, the vertical square
function (whose time derivative is taken exactly through the heat
equation, never by finite differences), the discrete Hilbert transform,
and spectral multipliers evaluated along either the transform or the
kernel route.  All operators commute with integer shifts exactly because
every window policy is anchored to the support bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .bessel import HeatKernelTable, certified_radius, heat_kernel_rows
from .multiplier import LaplaceMultiplier
from .quadrature import log_grid
from .sequences import Sequence, grid_dft, grid_idft, lp_quasinorm


def default_t_grid() -> np.ndarray:
    return log_grid(1e-6, 1e4, per_decade=60)


@dataclass(frozen=True)
class OperatorConfig:
    """Grids and window policy shared by the semigroup-based operators.

    ``t_grid`` drives both the supremum in the maximal function and the
    trapezoid (in log t) behind the square function; refining it never
    decreases maximal values.  ``pad_floor``/``pad_factor`` set how far
    past the support results are reported.
    """

    t_grid: np.ndarray = field(default_factory=default_t_grid)
    pad_floor: int = 1024
    pad_factor: int = 8
    heat_tail_tol: float = 1e-12
    trim_tol: float = 1e-14

    def __post_init__(self):
        t = np.atleast_1d(np.asarray(self.t_grid, dtype=float))
        if np.any(t <= 0) or np.any(np.diff(t) <= 0):
            raise ValueError("time grid must be positive and increasing")
        object.__setattr__(self, "t_grid", t)

    def pad(self, width: int) -> int:
        return max(self.pad_floor, self.pad_factor * width)

    def refined(self) -> "OperatorConfig":
        """Insert geometric midpoints into the time grid."""
        t = self.t_grid
        mids = np.sqrt(t[:-1] * t[1:])
        return replace(self, t_grid=np.sort(np.concatenate([t, mids])))


_table_cache: dict[tuple, HeatKernelTable] = {}


def _table_for(cfg: OperatorConfig, n_max: int) -> HeatKernelTable:
    key = (float(cfg.t_grid[0]), float(cfg.t_grid[-1]), len(cfg.t_grid))
    tab = _table_cache.get(key)
    if tab is None or tab.n_max < n_max:
        tab = HeatKernelTable.build(max(n_max, 128), cfg.t_grid)
        _table_cache[key] = tab
    return tab


def discrete_laplacian(f: Sequence) -> Sequence:
    """(Lf)(n) = -f(n+1) + 2 f(n) - f(n-1); exact, support grows by one."""
    if len(f.values) == 0:
        return f
    vals = np.convolve(f.values, np.array([-1.0, 2.0, -1.0]))
    return Sequence(f.offset - 1, vals)


def heat_apply(f: Sequence, t: float, tail_tol: float = 1e-12) -> Sequence:
    """Semigroup action: convolution with G(., t) at a certified radius.

    The truncation radius is grown until the Chernoff tail bound falls
    below tail_tol * ||f||_1, so mass conservation and the contraction
    properties survive the window.
    """
    if t <= 0:
        raise ValueError("time must be positive")
    if len(f.values) == 0:
        return f
    radius = certified_radius(t, tail_tol)
    rows = heat_kernel_rows(radius, np.array([t]))[:, 0]
    kernel = np.concatenate([rows[::-1], rows[1:]])
    vals = np.convolve(f.values, kernel.astype(complex))
    return Sequence(f.offset - radius, vals)


def _heat_columns(f: Sequence, cfg: OperatorConfig, pad: int) -> tuple[int, np.ndarray]:
    """W_t f on the support +- pad window for every grid time.

    Returns (lo, array of shape (len(t_grid), window)); the convolution
    against the kernel rows runs as one FFT batch over the time axis.
    """
    sup = f.support()
    lo, hi = (sup if sup is not None else (f.offset, f.offset))
    n_max = pad + (hi - lo)
    tab = _table_for(cfg, n_max + 1)
    rows = tab.G[:pad + (hi - lo) + 1]
    kernel = np.concatenate([rows[::-1], rows[1:]], axis=0).T  # (T, 2R+1)
    vals = f.window(lo, hi)
    width = hi - lo + 1 + kernel.shape[1] - 1
    size = 1 << (width - 1).bit_length()
    fa = np.fft.fft(vals, size)
    ka = np.fft.fft(kernel, size, axis=1)
    conv = np.fft.ifft(ka * fa[None, :], axis=1)[:, :width]
    if np.max(np.abs(vals.imag)) == 0.0:
        conv = conv.real.astype(complex)
    return lo - (kernel.shape[1] - 1) // 2, conv


def _trim(offset: int, vals: np.ndarray, floor: float) -> Sequence:
    keep = np.nonzero(np.abs(vals) > floor)[0]
    if keep.size == 0:
        return Sequence(0, np.zeros(0, dtype=complex))
    return Sequence(offset + int(keep[0]), vals[keep[0]:keep[-1] + 1])


@dataclass(frozen=True)
class MaximalResult:
    """sup_t |W_t f| over the grid plus a grid-quality report.

    ``refine_delta`` is the relative growth after inserting geometric
    midpoints (the supremum over a nested finer grid can only grow).
    ``edge_fraction`` is the value-squared-weighted share of the window
    attaining its maximum at the last grid time, i.e. how much of the
    reported mass the grid range is visibly truncating on the right;
    ``left_deficit`` measures how far the small-time end falls short of
    |f| itself (the supremum dominates the t -> 0 limit).
    """

    seq: Sequence
    refine_delta: float
    edge_fraction: float
    left_deficit: float

    @property
    def edge_warning(self) -> bool:
        return self.edge_fraction > 0.05 or self.left_deficit > 1e-3


def maximal(f: Sequence, cfg: OperatorConfig | None = None,
            report: bool = False):
    """Maximal function of the semigroup over the configured time grid."""
    cfg = cfg or OperatorConfig()
    if len(f.values) == 0:
        empty = Sequence(0, np.zeros(0, dtype=complex))
        return MaximalResult(empty, 0.0, 0.0, 0.0) if report else empty
    pad = cfg.pad(len(f.values))
    lo, conv = _heat_columns(f, cfg, pad)
    mags = np.abs(conv)
    sup = mags.max(axis=0)
    floor = cfg.trim_tol * lp_quasinorm(f, 2.0)
    out = _trim(lo, sup.astype(complex), floor)
    if not report:
        return out
    argmax = mags.argmax(axis=0)
    weights = sup * sup
    at_right = weights[argmax == mags.shape[0] - 1].sum()
    edge = float(at_right / weights.sum()) if weights.sum() > 0 else 0.0
    fvals = np.abs(f.window(lo, lo + sup.size - 1))
    scale = max(float(fvals.max()), 1e-300)
    left_deficit = float(np.max(fvals - sup) / scale)
    lo2, conv2 = _heat_columns(f, cfg.refined(), pad)
    sup2 = np.abs(conv2).max(axis=0)
    base = max(float(sup.max()), 1e-300)
    shift = lo - lo2
    delta = float(np.max(np.abs(sup2[shift:shift + sup.size] - sup)) / base)
    return MaximalResult(out, delta, edge, max(left_deficit, 0.0))


@dataclass(frozen=True)
class GFunctionResult:
    seq: Sequence
    endpoint_ratio: float
    flagged: bool


def g_function(f: Sequence, cfg: OperatorConfig | None = None,
               report: bool = False):
    """Vertical square function (int |t dW_t f/dt|^2 dt/t)^(1/2).

    The time derivative is the heat equation applied on the lattice:
    dW_t f/dt = -L W_t f, a three-point stencil of the convolved columns,
    then a trapezoid in log t across the grid.
    """
    cfg = cfg or OperatorConfig()
    if len(f.values) == 0:
        empty = Sequence(0, np.zeros(0, dtype=complex))
        return GFunctionResult(empty, 0.0, False) if report else empty
    pad = cfg.pad(len(f.values))
    lo, conv = _heat_columns(f, cfg, pad)
    t = cfg.t_grid
    u = np.log(t)
    w = np.empty_like(u)
    w[1:-1] = 0.5 * (u[2:] - u[:-2])
    w[0] = 0.5 * (u[1] - u[0])
    w[-1] = 0.5 * (u[-1] - u[-2])
    # t * dW/dt = -t * (lattice Laplacian) W, exact in n
    lap = -conv[:, :-2] + 2.0 * conv[:, 1:-1] - conv[:, 2:]
    integrand = np.abs(t[:, None] * lap) ** 2
    total = w @ integrand
    vals = np.sqrt(total)
    floor = cfg.trim_tol * lp_quasinorm(f, 2.0)
    out = _trim(lo + 1, vals.astype(complex), floor)
    if not report:
        return out
    # endpoint mass against the integral, over points within 1% of the
    # peak value; inputs with nonzero mean carry a universal t^(-1/2)
    # derivative tail, so their far field needs t_max ~ n^2 to converge
    significant = total > 1e-4 * float(total.max(initial=0.0))
    if significant.any():
        edge_mass = integrand[0, significant] + integrand[-1, significant]
        ratio = float(np.max(edge_mass / total[significant]))
    else:
        ratio = 0.0
    return GFunctionResult(out, ratio, ratio > 0.02)


def hilbert(f: Sequence, pad: int | None = None) -> Sequence:
    """Discrete Hilbert transform, convolution with 1/(n + 1/2).

    The kernel decays only like 1/n, so the reported window (support
    widened by ``pad``, default max(1024, 8 * width)) is part of the
    contract; quasinorm tails outside it are the caller's to certify.
    """
    if len(f.values) == 0:
        return f
    width = len(f.values)
    if pad is None:
        pad = max(1024, 8 * width)
    j = np.arange(-(pad + width - 1), pad + width)
    kernel = 1.0 / (j + 0.5)
    full = np.convolve(f.values, kernel.astype(complex))
    lo = f.offset - (pad + width - 1)
    start = width - 1
    return Sequence(lo + start, full[start:start + (width + 2 * pad)])


@dataclass(frozen=True)
class MultiplierResult:
    """Both evaluation routes of a spectral multiplier on one input."""

    fourier: Sequence | None
    kernel: Sequence | None
    pad: int
    certified: bool
    agreement: float | None

    @property
    def seq(self) -> Sequence:
        return self.kernel if self.kernel is not None else self.fourier


def multiplier_apply(f: Sequence, mult: LaplaceMultiplier,
                     path: str = "kernel", pad: int | None = None,
                     grid_factor: int = 8) -> MultiplierResult:
    """Apply the spectral multiplier along one or both routes.

    The transform route samples the symbol at lam(theta) on a power-of-two
    grid at least ``grid_factor`` times the padded width; the kernel route
    convolves against kernel values covering the full output window, with
    the window itself set by the profile's certified decay radius (capped
    and flagged for rough profiles).  ``path`` is fourier|kernel|both.
    """
    if len(f.values) == 0:
        empty = Sequence(0, np.zeros(0, dtype=complex))
        return MultiplierResult(empty, empty, 0, True, 0.0)
    sup = f.support()
    lo, hi = (sup if sup is not None else (f.offset, f.offset))
    width = hi - lo + 1
    if pad is None:
        pad, certified = mult.certified_radius()
    else:
        certified = True
    out_lo, out_hi = lo - pad, hi + pad
    out_len = out_hi - out_lo + 1
    four = kern = None
    if path in ("fourier", "both"):
        m = 1 << max(int(math.ceil(math.log2(max(grid_factor * out_len, 256)))), 1)
        sym = mult.symbol_on_grid(m)
        four = grid_idft(grid_dft(f, m) * sym, out_lo, out_len)
    if path in ("kernel", "both"):
        rows = mult.kernel_rows(out_len + width)
        j = np.abs(np.arange(-(out_len - 1) // 2 - width, (out_len + 1) // 2 + width))
        kernel_win = rows[j].astype(complex)
        full = np.convolve(f.window(lo, hi), kernel_win)
        k_lo = lo + (-(out_len - 1) // 2 - width)
        start = out_lo - k_lo
        kern = Sequence(out_lo, full[start:start + out_len])
    agreement = None
    if four is not None and kern is not None:
        diff = four - kern
        denom = max(lp_quasinorm(kern, 2.0), 1e-300)
        agreement = lp_quasinorm(diff.trimmed(), 2.0) / denom
    return MultiplierResult(fourier=four, kernel=kern, pad=pad,
                            certified=certified, agreement=agreement)
