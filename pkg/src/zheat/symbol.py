"""Torus symbol of the heat semigroup and its theta derivatives.

The semigroup acts on the torus as multiplication by
phi_t(theta) = exp(-2t(1 - cos theta)).  Every kernel estimate in this
package runs through the closed-form expansion of d^k/dtheta^k phi_t
obtained from the chain rule for higher derivatives: a sum over
multiplicity vectors (m_1, ..., m_k) with sum j*m_j = k of terms

    a * t^(m_1+...+m_k) * cos(theta)^alpha * sin(theta)^beta * phi_t(theta),

where alpha counts even-index multiplicities, beta odd-index ones, and the
integer coefficient a carries the alternating signs of the derivatives of
cos.  The exponent sigma = k + beta - 2*sum(m_j) is nonnegative and
vanishes exactly when m_3 = ... = m_k = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

PARTITION_CAP = 12


@dataclass(frozen=True)
class ChainRuleTerm:
    """One term of the expansion of d^k/dtheta^k phi_t."""

    multi_index: tuple[int, ...]
    coefficient: float
    cos_power: int
    sin_power: int
    t_power: int
    sigma: int


def _multiplicity_vectors(k: int):
    """All (m_1, ..., m_k) of nonnegative integers with sum j*m_j = k."""
    out = []

    def descend(j: int, remaining: int, acc: list[int]):
        if j > remaining:
            if remaining == 0:
                vec = [0] * k
                for idx, mult in acc:
                    vec[idx - 1] = mult
                out.append(tuple(vec))
            return
        if j == remaining:
            descend(j + 1, remaining, acc)
        for mult in range(remaining // j, -1, -1):
            descend(j + 1, remaining - j * mult, acc + ([(j, mult)] if mult else []))

    def simple(j: int, remaining: int, vec: list[int]):
        if j > k:
            if remaining == 0:
                out.append(tuple(vec))
            return
        for mult in range(remaining // j, -1, -1):
            vec[j - 1] = mult
            simple(j + 1, remaining - j * mult, vec)
        vec[j - 1] = 0

    out.clear()
    simple(1, k, [0] * k)
    return out


@lru_cache(maxsize=PARTITION_CAP + 1)
def faa_di_bruno_terms(k: int) -> tuple[ChainRuleTerm, ...]:
    """Expansion terms of the k-th theta derivative of the heat symbol.

    Capped at k = PARTITION_CAP; the term count is the partition number
    of k, so the cap is about keeping evaluation cost predictable.
    """
    if k < 1:
        raise ValueError("derivative order must be >= 1")
    if k > PARTITION_CAP:
        raise ValueError(f"derivative order capped at {PARTITION_CAP}")
    terms = []
    kfact = math.factorial(k)
    for vec in _multiplicity_vectors(k):
        total = sum(vec)
        alpha = sum(vec[j - 1] for j in range(2, k + 1, 2))
        beta = sum(vec[j - 1] for j in range(1, k + 1, 2))
        sign_exp = sum(j * vec[2 * j - 1] for j in range(1, k // 2 + 1))
        sign_exp += sum(j * vec[2 * j - 2] for j in range(1, (k + 1) // 2 + 1))
        denom = 1
        for j, m in enumerate(vec, start=1):
            denom *= math.factorial(m) * math.factorial(j) ** m
        coeff = (-1) ** sign_exp * (2 ** total) * kfact // denom
        sigma = k + beta - 2 * total
        assert sigma >= 0
        terms.append(ChainRuleTerm(multi_index=vec, coefficient=float(coeff),
                                   cos_power=alpha, sin_power=beta,
                                   t_power=total, sigma=sigma))
    return tuple(terms)


def heat_symbol(theta, t):
    """phi_t(theta) = exp(-2t(1 - cos theta)), the semigroup symbol."""
    theta = np.asarray(theta, dtype=float)
    s = np.sin(0.5 * theta)
    return np.exp(-4.0 * np.asarray(t, dtype=float) * s * s)


@dataclass(frozen=True)
class TorusProfile:
    """Heat symbol at a fixed time, as a callable profile on (0, pi)."""

    t: float

    def __post_init__(self):
        if self.t <= 0:
            raise ValueError("time must be positive")

    def __call__(self, theta):
        return heat_symbol(theta, self.t)


def theta_profiles(k: int, theta: np.ndarray) -> dict[int, np.ndarray]:
    """Group the expansion by t-power: d^k phi = phi * sum_p t^p S_p(theta)."""
    theta = np.asarray(theta, dtype=float)
    c = np.cos(theta)
    s = np.sin(theta)
    out: dict[int, np.ndarray] = {}
    for term in faa_di_bruno_terms(k):
        prof = term.coefficient * c ** term.cos_power * s ** term.sin_power
        if term.t_power in out:
            out[term.t_power] += prof
        else:
            out[term.t_power] = prof
    return out


def mixed_profiles(k: int, theta: np.ndarray) -> dict[int, np.ndarray]:
    """Same grouping for t * d/dt of d^k phi.

    Differentiating each term in t brings down (sum m_j - 2t(1 - cos)),
    so bucket p gains sum(m_j) * S and bucket p+1 gains -2(1-cos) * S.
    """
    theta = np.asarray(theta, dtype=float)
    c = np.cos(theta)
    s = np.sin(theta)
    one_minus_c = 2.0 * np.sin(0.5 * theta) ** 2
    out: dict[int, np.ndarray] = {}

    def add(p, arr):
        if p in out:
            out[p] += arr
        else:
            out[p] = arr.copy()

    for term in faa_di_bruno_terms(k):
        prof = term.coefficient * c ** term.cos_power * s ** term.sin_power
        add(term.t_power, term.t_power * prof)
        add(term.t_power + 1, -2.0 * one_minus_c * prof)
    return out


def _eval_profiles(profiles: dict[int, np.ndarray], t, theta) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    theta = np.asarray(theta, dtype=float)
    tt = t[..., None] if t.ndim else t
    total = np.zeros(np.broadcast_shapes(tt.shape if t.ndim else (),
                                         theta.shape))
    for p, prof in profiles.items():
        total = total + (tt ** p if t.ndim else t ** p) * prof
    return heat_symbol(theta, tt if t.ndim else t) * total


def symbol_theta_derivative(k: int, t, theta):
    """d^k/dtheta^k of the heat symbol; k = 0 returns the symbol itself.

    Scalars broadcast; passing a time grid of shape (T,) with a node set
    of shape (N,) yields a (T, N) table.
    """
    if k == 0:
        t = np.asarray(t, dtype=float)
        theta = np.asarray(theta, dtype=float)
        return heat_symbol(theta, t[..., None] if t.ndim else t)
    return _eval_profiles(theta_profiles(k, np.asarray(theta, dtype=float)), t, theta)


def symbol_mixed_derivative(k: int, t, theta):
    """t * d/dt of the k-th theta derivative (k = 0: t * d/dt of phi)."""
    theta = np.asarray(theta, dtype=float)
    if k == 0:
        t = np.asarray(t, dtype=float)
        tt = t[..., None] if t.ndim else t
        one_minus_c = 2.0 * np.sin(0.5 * theta) ** 2
        return -2.0 * tt * one_minus_c * heat_symbol(theta, tt)
    return _eval_profiles(mixed_profiles(k, theta), t, theta)
