"""Oscillatory integrals that extend the heat kernel off the lattice.

For derivative order k and the parity factor h_k = sin (k odd) / cos
(k even), the family

    H_k(z, t) = z^{-k} * int_0^pi  d^k/dtheta^k phi_t(theta) * h_k(z theta) dtheta

coincides, up to the sign (-1)^floor((k+1)/2) / pi, with the heat kernel
G(z, t) at integer z >= 1 (repeated integration by parts, using that odd
theta-derivatives of the symbol vanish at 0 and pi).  Differentiating k
times in z collapses, after the parity bookkeeping, to

    d^k/dz^k H_k = sum_{j=0..k} c_kj * z^{-(k+j)} *
                   int d^k phi * theta^{k-j} * h_j(z theta) dtheta,

with integer coefficients c_kj generated here by a small term algebra
instead of being transcribed by hand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .quadrature import ThetaRule, TimeRule, theta_rule, time_rule
from . import symbol as sym


def parity_trig(k: int, u):
    """h_k(u): sin(u) for odd k, cos(u) for even k."""
    return np.sin(u) if k % 2 else np.cos(u)


def half_sign(k: int) -> int:
    """(-1)^floor((k+1)/2), the sign tying H_k back to the heat kernel."""
    return -1 if ((k + 1) // 2) % 2 else 1


@lru_cache(maxsize=32)
def dz_expansion(k: int) -> tuple[tuple[int, int], ...]:
    """Coefficients c_kj of the k-th z-derivative of H_k.

    Terms are represented as (coefficient, z_power, theta_power, parity)
    meaning  coeff * z^{-z_power} * int d^k phi * theta^theta_power *
    h_parity(z theta).  One differentiation maps a term to its two
    product-rule children; sin/cos bookkeeping folds into the sign.
    Returns ((j, c_kj)) pairs with theta_power = k - j, z_power = k + j.
    """
    terms = {(k, 0, k % 2): 1}
    for _ in range(k):
        nxt: dict[tuple[int, int, int], int] = {}
        for (zp, tp, par), c in terms.items():
            key = (zp + 1, tp, par)
            nxt[key] = nxt.get(key, 0) - zp * c
            flip = 1 if par == 1 else -1  # d sin = +cos, d cos = -sin
            key = (zp, tp + 1, 1 - par)
            nxt[key] = nxt.get(key, 0) + flip * c
        terms = {key: c for key, c in nxt.items() if c != 0}
    out = []
    for (zp, tp, par), c in terms.items():
        j = zp - k
        assert tp == k - j and par == j % 2
        out.append((j, c))
    return tuple(sorted(out))


def profile_matrix(k: int, rule: ThetaRule, t: np.ndarray,
                   mixed: bool = False, chunk: int = 768):
    """Iterate (t-slice, value block) of d^k phi (or t d/dt of it) on the rule.

    Yields chunks along the time axis to keep the (T, N) table bounded in
    memory; each block has shape (len(slice), len(rule.nodes)).
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    theta = rule.nodes
    if k == 0:
        profiles = {0: np.ones_like(theta)} if not mixed else \
            {1: -4.0 * np.sin(0.5 * theta) ** 2}
    else:
        profiles = (sym.mixed_profiles if mixed else sym.theta_profiles)(k, theta)
    base = -4.0 * np.sin(0.5 * theta) ** 2
    for start in range(0, t.size, chunk):
        ts = t[start:start + chunk]
        with np.errstate(under="ignore"):
            block = np.exp(np.outer(ts, base))
            poly = np.zeros_like(block)
            for p, prof in profiles.items():
                poly += np.outer(ts ** p, prof)
            block *= poly
        yield slice(start, start + ts.size), block


def theta_integrals(k: int, zs, t: np.ndarray, weight_powers, parities,
                    rule: ThetaRule | None = None, mixed: bool = False):
    """Batched integrals int d^k phi * theta^q * h_par(z theta) dtheta.

    ``weight_powers`` and ``parities`` run in lockstep; the result has
    shape (len(zs), len(weight_powers), len(t)).
    """
    zs = np.atleast_1d(np.asarray(zs, dtype=float))
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if rule is None:
        rule = theta_rule(osc=float(zs.max()), t_max=float(t.max()))
    theta = rule.nodes
    w = rule.weights
    stacks = []
    for z in zs:
        for q, par in zip(weight_powers, parities):
            stacks.append(w * theta ** q * parity_trig(par, z * theta))
    weights = np.array(stacks)  # (Z*Q, N)
    out = np.empty((weights.shape[0], t.size))
    for tslice, block in profile_matrix(k, rule, t, mixed=mixed):
        out[:, tslice] = weights @ block.T
    return out.reshape(len(zs), len(weight_powers), t.size)


def kernel_via_parts(k: int, m: int, t: float, rule: ThetaRule | None = None) -> float:
    """Heat kernel G(m, t) recovered from the k-fold parts integral.

    ((-1)^floor((k+1)/2) / (pi m^k)) * int_0^pi d^k phi_t * h_k(m theta).
    Valid for any nonzero integer m (parity makes the two signs cancel
    for negative m) and k >= 1.
    """
    if m == 0:
        raise ValueError("index must be nonzero")
    if k < 1:
        raise ValueError("derivative order must be >= 1")
    if t <= 0:
        raise ValueError("time must be positive")
    if rule is None:
        rule = theta_rule(osc=float(abs(m)), t_max=float(t))
    vals = theta_integrals(k, [float(m)], np.array([t]), [0], [k], rule=rule)
    integral = float(vals[0, 0, 0])
    return half_sign(k) * integral / (math.pi * float(m) ** k)


def oscillatory_moment(z: float, t, k: int, rule: ThetaRule | None = None):
    """H_k(z, t); at integer z >= 1 equals pi * half_sign(k) * G(z, t)."""
    if z <= 0:
        raise ValueError("z must be positive")
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if rule is None:
        rule = theta_rule(osc=float(z), t_max=float(t_arr.max()))
    vals = theta_integrals(k, [z], t_arr, [0], [k], rule=rule)[0, 0]
    out = vals / z ** k
    return float(out[0]) if np.isscalar(t) or np.ndim(t) == 0 else out


def dz_oscillatory_moment(z: float, t, k: int, rule: ThetaRule | None = None):
    """k-th z-derivative of H_k via the collapsed expansion."""
    if z <= 0:
        raise ValueError("z must be positive")
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if rule is None:
        rule = theta_rule(osc=float(z), t_max=float(t_arr.max()))
    coeffs = dz_expansion(k)
    powers = [k - j for j, _ in coeffs]
    pars = [j % 2 for j, _ in coeffs]
    vals = theta_integrals(k, [z], t_arr, powers, pars, rule=rule)[0]
    out = np.zeros(t_arr.size)
    for (j, c), row in zip(coeffs, vals):
        out += c * z ** (-(k + j)) * row
    return float(out[0]) if np.isscalar(t) or np.ndim(t) == 0 else out


def dz_moment_table(zs, t: np.ndarray, k: int, mixed: bool = False,
                    rule: ThetaRule | None = None) -> np.ndarray:
    """d^k/dz^k H_k (or t d/dt of it) for many z on a shared rule.

    Shape (len(zs), len(t)).  One profile pass serves every z, so the
    rule must resolve the largest oscillation in ``zs``.
    """
    zs = np.atleast_1d(np.asarray(zs, dtype=float))
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if rule is None:
        rule = theta_rule(osc=float(zs.max()), t_max=float(t.max()))
    coeffs = dz_expansion(k)
    powers = [k - j for j, _ in coeffs]
    pars = [j % 2 for j, _ in coeffs]
    vals = theta_integrals(k, zs, t, powers, pars, rule=rule, mixed=mixed)
    out = np.zeros((zs.size, t.size))
    for col, (j, c) in enumerate(coeffs):
        out += (c * zs[:, None] ** (-(k + j))) * vals[:, col, :]
    return out


# -- L^2(dt/t) quadrature ------------------------------------------------------

DEFAULT_L2_RULE = (-9.0, 18.0, 3073)


@dataclass(frozen=True)
class L2dttResult:
    """Norm in L^2((0, inf), dt/t) with an endpoint-mass diagnostic."""

    value: float
    endpoint_ratio: float
    flagged: bool


def l2dtt_norm(fn, rule: TimeRule | None = None,
               endpoint_tol: float = 1e-6) -> L2dttResult:
    """|| fn ||_{L^2((0,inf), dt/t)} by trapezoid in u = log t.

    ``fn`` is evaluated on the rule's time grid (vectorized callable or a
    precomputed array).  The squared endpoint values, taken as a proxy for
    the truncated tail mass (one u-unit wide), are compared against the
    integral; a result whose tails have not decayed comes back flagged.
    """
    if rule is None:
        rule = time_rule(*DEFAULT_L2_RULE)
    vals = fn(rule.t) if callable(fn) else np.asarray(fn, dtype=float)
    sq = vals * vals
    total = float(rule.integrate_dtt(sq))
    edge = float(sq[0] + sq[-1]) if sq.size else 0.0
    ratio = edge / total if total > 0 else 0.0
    return L2dttResult(value=math.sqrt(max(total, 0.0)),
                       endpoint_ratio=ratio,
                       flagged=ratio > endpoint_tol)
