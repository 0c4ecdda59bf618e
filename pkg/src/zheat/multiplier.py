"""Laplace-transform-type spectral multipliers of the lattice Laplacian.

A bounded profile psi on (0, infinity) induces the symbol

    m(lam) = lam * int_0^inf e^{-lam t} psi(t) dt,      |m| <= sup |psi|,

and, through the heat semigroup, the convolution kernel

    K(n) = - int_0^inf psi(t) dG(n, t)/dt dt.

Piecewise-constant profiles are evaluated in closed form: on a constant
piece [a, b) the kernel picks up v * (G(., a) - G(., b)) and the symbol
v * (e^{-lam a} - e^{-lam b}), which are exact transforms of each other,
so the Fourier-side and kernel-side evaluations of the operator agree to
rounding wherever the transform grid can hold the kernel.  Profiles
without that structure fall back to a trapezoid rule in u = log t on a
shared time grid, used identically by both sides; profiles that decay
(psi negligible past the grid) stay certified, anything else is flagged.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .quadrature import TimeRule, theta_rule, time_rule
from .bessel import bessel_i_scaled_table

DEFAULT_TIME_RULE = (-26.0, 14.0, 4001)

_dg_cache: dict[tuple, np.ndarray] = {}


def default_time_rule() -> TimeRule:
    return time_rule(*DEFAULT_TIME_RULE)


def _rule_key(rule: TimeRule) -> tuple:
    return (float(rule.u[0]), float(rule.u[-1]), len(rule.u))


def _dg_rows(n_max: int, rule: TimeRule) -> np.ndarray:
    """dG/dt rows 0..n_max over the rule's time grid, cached."""
    key = (_rule_key(rule),)
    have = _dg_cache.get(key)
    if have is None or have.shape[0] < n_max + 1:
        size = max(n_max + 1, 256)
        rows = bessel_i_scaled_table(size + 1, 2.0 * rule.t)
        dg = np.empty((size + 1, rule.t.size))
        dg[0] = 2.0 * rows[1] - 2.0 * rows[0]
        dg[1:] = rows[:size] + rows[2:size + 2] - 2.0 * rows[1:size + 1]
        _dg_cache[key] = dg
        have = dg
    return have[:n_max + 1]


def heat_rows_combined(n_max: int, profile_values, times) -> np.ndarray:
    """sum_j c_j * G(n, t_j) for n = 0..n_max via one torus quadrature.

    ``times`` may include 0 (G(., 0) is the unit mass at the origin; its
    torus profile is the constant 1).  One combined symbol profile keeps
    the whole linear combination a single cosine-transform pass.
    """
    times = np.asarray(times, dtype=float)
    t_max = float(times.max())
    rule = theta_rule(osc=float(max(n_max, 1)), t_max=max(t_max, 1.0))
    theta = rule.nodes
    s2 = np.sin(0.5 * theta) ** 2
    combined = np.zeros_like(theta)
    with np.errstate(under="ignore"):
        for c, t in zip(profile_values, times):
            combined += c * (np.exp(-4.0 * t * s2) if t > 0 else 1.0)
    weighted = rule.weights * combined
    n = np.arange(n_max + 1)
    out = np.empty(n_max + 1)
    chunk = max(1, int(4e6 // max(theta.size, 1)))
    for start in range(0, n_max + 1, chunk):
        block = n[start:start + chunk]
        out[start:start + chunk] = np.cos(np.outer(block, theta)) @ weighted
    return out / math.pi


class LaplaceMultiplier:
    """Symbol and kernel of the multiplier induced by a bounded profile.

    Parameters
    ----------
    psi : vectorized callable on positive times.
    sup_norm : bound on |psi|; inherited by the symbol.
    pieces : optional ((start, value), ...) description of psi as a
        piecewise-constant function; starts begin at 0.0 and the last
        value extends to infinity.  Enables the exact closed form.
    decays : for non-piecewise profiles, declares that psi is negligible
        beyond the time rule; without it kernel tails are uncertified.
    name : stable identifier used for caching.
    """

    def __init__(self, psi: Callable, sup_norm: float, name: str,
                 pieces: tuple[tuple[float, float], ...] | None = None,
                 decays: bool = False, rule: TimeRule | None = None):
        self.psi = psi
        self.sup_norm = float(sup_norm)
        self.name = name
        self.pieces = pieces
        self.decays = decays
        self.rule = rule if rule is not None else default_time_rule()
        self._psi_grid = None if pieces is not None else np.asarray(
            psi(self.rule.t), dtype=float)
        self._kernel_rows = np.zeros(0)
        self._symbol_cache: dict[int, np.ndarray] = {}

    # -- symbol ---------------------------------------------------------------

    def symbol(self, lam) -> np.ndarray:
        """m(lam) = lam * int e^{-lam t} psi(t) dt."""
        lam = np.atleast_1d(np.asarray(lam, dtype=float))
        with np.errstate(under="ignore"):
            if self.pieces is not None:
                out = np.zeros_like(lam)
                starts = [p[0] for p in self.pieces] + [math.inf]
                for (a, v), b in zip(self.pieces, starts[1:]):
                    lo = np.exp(-lam * a) if a > 0 else np.ones_like(lam)
                    hi = np.exp(-lam * b) if b < math.inf else 0.0
                    out += v * (lo - hi)
                return out
            expmat = np.exp(-np.outer(lam, self.rule.t))
            return lam * (expmat @ (self.rule.w * self.rule.t * self._psi_grid))

    def symbol_on_grid(self, m: int) -> np.ndarray:
        """Symbol sampled at lam(theta_j) = 2(1 - cos(2 pi j / m)), cached."""
        if m not in self._symbol_cache:
            theta = 2.0 * math.pi * np.arange(m) / m
            lam = 2.0 - 2.0 * np.cos(theta)
            self._symbol_cache[m] = self.symbol(lam)
        return self._symbol_cache[m]

    # -- kernel ---------------------------------------------------------------

    def kernel_rows(self, n_max: int) -> np.ndarray:
        """K(n) for n = 0..n_max (the kernel is even in n)."""
        if self._kernel_rows.shape[0] >= n_max + 1:
            return self._kernel_rows[:n_max + 1]
        if self.pieces is not None:
            starts = [p[0] for p in self.pieces]
            values = [p[1] for p in self.pieces]
            # telescoping: sum v_j (G(a_j) - G(a_{j+1})) regroups to
            # coefficient v_j - v_{j-1} on each start time
            coefs = [values[0]] + [values[j] - values[j - 1]
                                   for j in range(1, len(values))]
            rows = heat_rows_combined(n_max, coefs, np.asarray(starts))
        else:
            dg = _dg_rows(n_max, self.rule)
            rows = -(dg @ (self.rule.w * self.rule.t * self._psi_grid))
        self._kernel_rows = rows
        return rows

    def kernel(self, n: int) -> float:
        return float(self.kernel_rows(abs(int(n)))[abs(int(n))])

    def tail_bound(self) -> float:
        """Certified bound on the kernel mass unaccounted for in time.

        Piecewise-constant and decaying profiles are exact up to
        rounding; an unstructured profile leaves up to
        sup|psi| * O(G(., T0)) on the table past the grid.
        """
        if self.pieces is not None or self.decays:
            return 1e-12
        t0 = float(self.rule.t[-1])
        return self.sup_norm * 2.0 / math.sqrt(4.0 * math.pi * t0)

    def certified_radius(self, tol: float = 1e-12,
                         cap: int = 2048) -> tuple[int, bool]:
        """Radius past which the remaining kernel mass drops below tol.

        Returns (radius, certified); slowly decaying kernels (rough
        profiles) hit the cap and come back uncertified.  The threshold
        never drops below the quadrature noise floor of the rows.
        """
        rows = np.abs(self.kernel_rows(cap))
        scale = rows.max()
        csum = np.cumsum(rows[::-1])[::-1]
        floor = max(tol * scale, 2e-15 * cap, 1e-300)
        ok = np.nonzero(csum <= floor)[0]
        if ok.size and ok[0] < cap:
            return max(int(ok[0]), 1), True
        return cap, False


def _logsign_pieces() -> tuple[tuple[float, float], ...]:
    """sign(sin(log t)) as constant pieces between t = e^{k pi}.

    Breakpoints below e^{-10 pi} are dropped: the heat kernel moves less
    than ~4e^{-31} of mass before that time, so extending the innermost
    sign constantly to 0 is far below double-precision relevance.  Above
    e^{14 pi} the kernel columns are numerically static as well.
    """
    k_lo, k_hi = -10, 14
    pieces = [(0.0, 1.0 if k_lo % 2 == 0 else -1.0)]
    for k in range(k_lo, k_hi + 1):
        pieces.append((math.exp(k * math.pi), 1.0 if k % 2 == 0 else -1.0))
    return tuple(pieces)


def make_profile(name: str) -> LaplaceMultiplier:
    """Built-in profiles: one, exp, indicator, logsign."""
    if name == "one":
        return LaplaceMultiplier(lambda t: np.ones_like(np.asarray(t, dtype=float)),
                                 sup_norm=1.0, name="one", pieces=((0.0, 1.0),))
    if name == "exp":
        return LaplaceMultiplier(lambda t: np.exp(-np.asarray(t, dtype=float)),
                                 sup_norm=1.0, name="exp", decays=True)
    if name == "indicator":
        return LaplaceMultiplier(
            lambda t: (np.asarray(t, dtype=float) <= 1.0).astype(float),
            sup_norm=1.0, name="indicator", pieces=((0.0, 1.0), (1.0, 0.0)))
    if name == "logsign":
        return LaplaceMultiplier(
            lambda t: np.sign(np.sin(np.log(np.asarray(t, dtype=float)))),
            sup_norm=1.0, name="logsign", pieces=_logsign_pieces())
    raise ValueError(f"unknown profile {name!r}; "
                     "expected one|exp|indicator|logsign")


PROFILE_NAMES = ("one", "exp", "indicator", "logsign")

_profile_cache: dict[str, LaplaceMultiplier] = {}


def profile(name: str) -> LaplaceMultiplier:
    """Shared instance of a built-in profile (kernels cache per profile)."""
    if name not in _profile_cache:
        _profile_cache[name] = make_profile(name)
    return _profile_cache[name]
