"""Composite Gauss-Legendre rules and logarithmic time grids.

Two integrand families drive the panel layouts here.  Torus integrals on
(0, pi) concentrate near theta = 0 once the diffusion time is large, and
pick up an oscillation cos(z*theta) / sin(z*theta) whose frequency z can
reach a few hundred; panels are therefore refined geometrically toward 0
and subdivided so no panel spans more than a few radians of phase.
Half-line time integrals are handled with the substitution t = exp(u) and
a trapezoid rule on a uniform u grid, which is spectrally accurate for
integrands that decay at both ends in u.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

DEFAULT_PANEL_ORDER = 16
# phase per sub-panel kept below ~6 rad so order-16 Gauss resolves it
_MAX_PHASE = 6.0


@lru_cache(maxsize=64)
def gauss_legendre(order: int):
    """Nodes and weights of the Gauss-Legendre rule on [-1, 1]."""
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def panel_rule(edges: np.ndarray, order: int = DEFAULT_PANEL_ORDER):
    """Composite Gauss-Legendre nodes/weights over consecutive panels.

    Parameters
    ----------
    edges : increasing 1-d array of panel boundaries.
    order : Gauss order used on every panel.

    Returns
    -------
    nodes, weights : flat arrays, one entry per quadrature node.
    """
    edges = np.asarray(edges, dtype=float)
    x, w = gauss_legendre(order)
    a, b = edges[:-1], edges[1:]
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


@dataclass(frozen=True)
class ThetaRule:
    """Quadrature rule on (0, pi) tagged with what it can resolve."""

    nodes: np.ndarray
    weights: np.ndarray
    max_oscillation: float
    theta_min: float

    def integrate(self, values: np.ndarray) -> np.ndarray:
        return values @ self.weights


def _theta_edges(osc: float, theta_feature: float) -> np.ndarray:
    osc = max(float(osc), 1.0)
    theta_min = min(theta_feature, math.pi / (4.0 * osc))
    levels = int(np.clip(math.ceil(math.log2(math.pi / theta_min)) + 1, 4, 48))
    geo = [math.pi * 2.0 ** (-j) for j in range(levels, -1, -1)]
    edges = [0.0]
    for a, b in zip(geo[:-1], geo[1:]):
        m = int(math.ceil((b - a) * osc / _MAX_PHASE))
        edges.extend(a + (b - a) * (i + 1) / m for i in range(m))
    # first geometric panel [0, pi*2^-levels] has no subdivision to do
    edges.insert(1, geo[0])
    out = np.unique(np.asarray(edges))
    return out


@lru_cache(maxsize=256)
def theta_rule(osc: float = 0.0, t_max: float | None = None,
               order: int = DEFAULT_PANEL_ORDER) -> ThetaRule:
    """Composite rule on (0, pi) for heat-symbol integrands.

    ``osc`` is the largest trig frequency z that will appear as
    cos(z*theta)/sin(z*theta); ``t_max`` the largest diffusion time, which
    sets how deep the refinement toward theta = 0 must go (the symbol
    derivative lives on a theta scale ~ 1/sqrt(t)).
    """
    feature = 0.05
    if t_max is not None and t_max > 0:
        feature = min(feature, 0.5 / math.sqrt(t_max))
    edges = _theta_edges(osc, feature)
    nodes, weights = panel_rule(edges, order)
    return ThetaRule(nodes=nodes, weights=weights,
                     max_oscillation=max(osc, 1.0), theta_min=float(edges[1]))


@dataclass(frozen=True)
class TimeRule:
    """Trapezoid rule in u = log t for integrals over (0, infinity).

    ``integrate_dt`` approximates  int f(t) dt      = int f(e^u) e^u du,
    ``integrate_dtt`` approximates int f(t) dt / t  = int f(e^u) du.
    """

    u: np.ndarray
    t: np.ndarray
    w: np.ndarray  # trapezoid weights in u

    def integrate_dt(self, values: np.ndarray) -> np.ndarray:
        return (values * self.t) @ self.w if values.ndim > 1 else np.dot(values * self.t, self.w)

    def integrate_dtt(self, values: np.ndarray) -> np.ndarray:
        return values @ self.w

    def refined(self) -> "TimeRule":
        return time_rule(float(self.u[0]), float(self.u[-1]), 2 * (len(self.u) - 1) + 1)


@lru_cache(maxsize=32)
def time_rule(u_lo: float, u_hi: float, n: int) -> TimeRule:
    u = np.linspace(u_lo, u_hi, n)
    w = np.full(n, u[1] - u[0])
    w[0] *= 0.5
    w[-1] *= 0.5
    return TimeRule(u=u, t=np.exp(u), w=w)


def log_grid(t_min: float, t_max: float, per_decade: int = 60) -> np.ndarray:
    """Log-spaced grid with a fixed point density per decade."""
    if t_min <= 0 or t_max <= t_min:
        raise ValueError("need 0 < t_min < t_max")
    decades = math.log10(t_max / t_min)
    count = max(2, int(round(decades * per_decade)) + 1)
    return np.geomspace(t_min, t_max, count)


@dataclass(frozen=True)
class QuadResult:
    """Value of a quadrature together with a self-estimated error."""

    value: complex
    error: float
    converged: bool

    def __complex__(self):
        return complex(self.value)

    def __float__(self):
        v = complex(self.value)
        return v.real
