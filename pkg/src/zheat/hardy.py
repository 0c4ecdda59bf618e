"""Atoms and molecules of the discrete Hardy spaces, with sweep harnesses.

An atom is a finitely supported sequence sitting in a lattice ball,
bounded in an l^q sense by the ball measure to the power 1/q - 1/p, and
killing monomial moments: just the mean for the plain flavor, every
integer power up to 1/p - 1 for the strong (moment-killed) flavor.
Molecules trade compact support for a weighted-norm decay budget.  The
sweep harnesses push random atoms through the semigroup operators and
report the near/far split of the l^p mass together with max/median and
radius-trend statistics, the numerical counterpart of uniform
boundedness over the atom class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .operators import (OperatorConfig, g_function, hilbert, maximal,
                        multiplier_apply)
from .multiplier import LaplaceMultiplier
from .sequences import Sequence, lp_quasinorm


def ball_measure(r0: float) -> int:
    """Counting measure of the lattice ball of radius r0: 2*floor(r0) + 1."""
    return 2 * int(math.floor(r0)) + 1


def moment_orders(p: float, flavor: str) -> list[int]:
    """Vanishing-moment orders demanded of an atom: alpha <= 1/p - 1."""
    if flavor == "plain":
        return [0]
    return list(range(int(math.floor(1.0 / p - 1.0)) + 1))


@dataclass(frozen=True)
class AtomCheck:
    name: str
    passed: bool
    slack: float


@dataclass(frozen=True)
class AtomReport:
    checks: tuple[AtomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


@dataclass(frozen=True)
class Atom:
    """Candidate atom: sequence plus the parameters it claims to satisfy."""

    seq: Sequence
    n0: int
    r0: float
    p: float
    q: float
    flavor: str = "strong"  # "plain" or "strong"

    def __post_init__(self):
        if not (0 < self.p <= 1):
            raise ValueError("p must lie in (0, 1]")
        if self.q < 1 or self.q <= self.p:
            raise ValueError("need p < q and q >= 1")
        if self.r0 < 1:
            raise ValueError("radius must be >= 1")
        if self.flavor not in ("plain", "strong"):
            raise ValueError("flavor is 'plain' or 'strong'")


def validate_atom(atom: Atom, tol: float = 1e-12) -> AtomReport:
    """Check support, size, and moment conditions, reporting slack per item.

    Moment slack is normalized by r0^alpha * ||b||_1 so the criterion is
    scale-free across radius sweeps.
    """
    seq, n0, r0 = atom.seq, atom.n0, atom.r0
    checks = []
    sup = seq.support()
    radius = int(math.floor(r0))
    if sup is None:
        checks.append(AtomCheck("support", True, 0.0))
    else:
        overhang = max(n0 - radius - sup[0], sup[1] - (n0 + radius), 0)
        checks.append(AtomCheck("support", overhang == 0, float(overhang)))
    mu = ball_measure(r0)
    bound = mu ** ((0.0 if atom.q == math.inf else 1.0 / atom.q) - 1.0 / atom.p)
    norm = lp_quasinorm(seq, atom.q)
    checks.append(AtomCheck("size", norm <= bound * (1.0 + tol),
                            float(norm - bound)))
    l1 = lp_quasinorm(seq, 1.0)
    n = seq.indices() - n0
    for alpha in moment_orders(atom.p, atom.flavor):
        moment = abs(np.sum((n.astype(float) ** alpha) * seq.values))
        scale = max(r0 ** alpha * l1, 1e-300)
        checks.append(AtomCheck(f"moment_{alpha}", moment <= tol * scale,
                                float(moment / scale)))
    return AtomReport(tuple(checks))


def random_atom(p: float, q: float, n0: int, r0: float,
                seed) -> Atom:
    """Random moment-killed atom on the ball, normalized to the size bound.

    Gaussian values are projected (in l^2) off the span of the centered
    monomials up to order 1/p - 1, then rescaled so the l^q norm meets
    the ball bound exactly.  The ball must strictly exceed the number of
    moment constraints.
    """
    radius = int(math.floor(r0))
    pts = 2 * radius + 1
    orders = moment_orders(p, "strong")
    if pts <= len(orders):
        raise ValueError(
            f"ball of {pts} points cannot support {len(orders)} moment "
            f"constraints; increase r0")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    x = np.arange(-radius, radius + 1, dtype=float)
    basis = np.stack([x ** a for a in orders], axis=1)
    qmat, _ = np.linalg.qr(basis)
    vals = rng.standard_normal(pts)
    vals -= qmat @ (qmat.T @ vals)
    norm = np.linalg.norm(vals)
    if norm < 1e-12:
        vals = np.zeros(pts)
        vals[0] = 1.0
        vals -= qmat @ (qmat.T @ vals)
        norm = np.linalg.norm(vals)
    seq = Sequence(n0 - radius, vals)
    mu = ball_measure(r0)
    bound = mu ** ((0.0 if q == math.inf else 1.0 / q) - 1.0 / p)
    seq = seq * (bound / lp_quasinorm(seq, q))
    return Atom(seq=seq, n0=n0, r0=r0, p=p, q=q, flavor="strong")


# -- molecules -----------------------------------------------------------------


@dataclass(frozen=True)
class Molecule:
    """Sequence with a weighted-decay budget in place of compact support."""

    seq: Sequence
    n0: int
    p: float
    q: float
    alpha: float

    def __post_init__(self):
        if not (0 < self.p <= 1):
            raise ValueError("p must lie in (0, 1]")
        if not (self.q > 1):
            raise ValueError("q must exceed 1")
        gap = 1.0 / self.p - (0.0 if self.q == math.inf else 1.0 / self.q)
        if self.alpha < gap:
            raise ValueError("alpha must be at least 1/p - 1/q")

    @property
    def theta(self) -> float:
        gap = 1.0 / self.p - (0.0 if self.q == math.inf else 1.0 / self.q)
        return gap / self.alpha


@dataclass(frozen=True)
class MoleculeNorm:
    value: float
    theta: float
    plain_norm: float
    weighted_norm: float
    tail_exponent: float
    tail_ratio: float
    certified: bool


def molecule_norm(mol: Molecule, tail_tol: float = 1e-3) -> MoleculeNorm:
    """N(M) = ||M||_q^(1-theta) * || |n - n0|^alpha M ||_q^theta.

    The weighted norm is computed on the stored window; the window tail
    is certified by fitting the decay exponent on the outer quarter of
    the window and bounding the remainder, and flagged when the measured
    decay cannot control the weight.
    """
    seq = mol.seq
    q = mol.q
    dist = np.abs(seq.indices() - mol.n0).astype(float)
    mags = np.abs(seq.values)
    plain = lp_quasinorm(seq, q)
    if q == math.inf:
        weighted = float((dist ** mol.alpha * mags).max(initial=0.0))
    else:
        weighted = float(((dist ** mol.alpha * mags) ** q).sum() ** (1.0 / q))
    # decay estimate on the outer quarter (both sides pooled)
    radius = dist.max(initial=0.0)
    outer = (dist >= 0.75 * radius) & (dist > 0) & (mags > 0)
    if outer.sum() >= 4 and radius >= 8:
        slope = np.polyfit(np.log(dist[outer]), np.log(mags[outer]), 1)[0]
    else:
        slope = -math.inf
    edge = float(mags[outer].max(initial=0.0)) if outer.any() else 0.0
    if q == math.inf:
        decay_ok = mol.alpha + slope < 0.0
    else:
        decay_ok = (mol.alpha + slope) * q < -1.0
    if weighted == 0.0 or edge == 0.0:
        tail_ratio = 0.0
    elif not decay_ok:
        tail_ratio = math.inf
    elif q == math.inf:
        tail_ratio = edge * radius ** mol.alpha / max(weighted, 1e-300)
    else:
        # integral bound on sum_{|n|>R} (n^alpha |M|)^q with |M| ~ edge * (n/R)^slope,
        # evaluated in logs: tail_q = edge^q R^(alpha q + 1) / |(alpha+slope) q + 1|
        expo = (mol.alpha + slope) * q
        log_tail = (q * math.log(edge) + (mol.alpha * q + 1.0) * math.log(radius)
                    - math.log(-expo - 1.0))
        tail_ratio = math.exp(min(log_tail - q * math.log(max(weighted, 1e-300)),
                                  700.0))
    certified = math.isfinite(tail_ratio) and tail_ratio <= tail_tol
    value = plain ** (1.0 - mol.theta) * weighted ** mol.theta
    return MoleculeNorm(value=value, theta=mol.theta, plain_norm=plain,
                        weighted_norm=weighted, tail_exponent=float(slope),
                        tail_ratio=float(tail_ratio), certified=certified)


# -- operator sweeps -----------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    atom_id: int
    r0: float
    near: float
    far: float
    total: float


@dataclass(frozen=True)
class SweepReport:
    op: str
    p: float
    rows: tuple[SweepRow, ...]
    max_over_median: float
    r0_slope: float

    def totals(self) -> np.ndarray:
        return np.array([r.total for r in self.rows])


def _sweep_config(r0: float) -> OperatorConfig:
    return OperatorConfig(t_grid=np.geomspace(1e-6, 1e4, 201),
                          pad_floor=max(256, 64 * int(r0)),
                          pad_factor=1)


def _apply_op(op: str, atom: Atom, mult: LaplaceMultiplier | None) -> Sequence:
    cfg = _sweep_config(atom.r0)
    if op == "maximal":
        return maximal(atom.seq, cfg)
    if op == "gfun":
        return g_function(atom.seq, cfg)
    if op == "mult":
        if mult is None:
            raise ValueError("mult sweep needs a multiplier profile")
        pad = cfg.pad(len(atom.seq.values))
        return multiplier_apply(atom.seq, mult, path="kernel", pad=pad).kernel
    raise ValueError(f"unknown sweep operator {op!r}")


def near_far_split(out: Sequence, n0: int, r0: float, p: float) -> tuple[float, float]:
    """l^p mass (to the p) inside and outside the doubled ball."""
    radius = 2 * int(math.floor(r0))
    dist = np.abs(out.indices() - n0)
    mags = np.abs(out.values) ** p
    near = float(mags[dist <= radius].sum())
    far = float(mags[dist > radius].sum())
    return near, far


def atom_operator_sweep(op: str, p: float, num_atoms: int, r0_list,
                        seed: int, mult: LaplaceMultiplier | None = None,
                        q: float = 2.0) -> SweepReport:
    """Push random moment-killed atoms through an operator, collect the
    l^p budget split at the doubled ball, and summarize spread and trend.

    The far window scales with r0 (64x, floored at 256) so truncation
    treats every radius alike and the trend statistic stays honest.
    """
    rows = []
    atom_id = 0
    for r0 in r0_list:
        for j in range(num_atoms):
            atom = random_atom(p, q, 0, r0, np.random.default_rng([seed, int(r0), j]))
            out = _apply_op(op, atom, mult)
            near, far = near_far_split(out, atom.n0, r0, p)
            rows.append(SweepRow(atom_id=atom_id, r0=float(r0), near=near,
                                 far=far, total=near + far))
            atom_id += 1
    totals = np.array([r.total for r in rows])
    max_over_median = float(totals.max() / np.median(totals))
    med_by_r0 = [float(np.median([r.total for r in rows if r.r0 == float(r0)]))
                 for r0 in r0_list]
    if len(r0_list) > 1:
        slope = float(np.polyfit(np.log(np.asarray(r0_list, dtype=float)),
                                 np.log(med_by_r0), 1)[0])
    else:
        slope = 0.0
    return SweepReport(op=op, p=p, rows=tuple(rows),
                       max_over_median=max_over_median, r0_slope=slope)


# -- multiplier moments and molecule membership --------------------------------


@dataclass(frozen=True)
class MomentsReport:
    orders: tuple[int, ...]
    values: tuple[float, ...]
    tolerances: tuple[float, ...]
    control_order: int
    control_value: float
    certified: bool

    @property
    def passed(self) -> bool:
        return self.certified and all(v <= t for v, t in
                                      zip(self.values, self.tolerances))


def multiplier_moments(mult: LaplaceMultiplier, atom: Atom,
                       pad: int | None = None,
                       tol: float = 1e-6) -> MomentsReport:
    """Centered moments of the multiplier image of a moment-killed atom.

    Orders up to 1/p - 1 must vanish; the next order is reported as a
    nonvanishing control.  Tolerances scale with r0^j * ||image||_1, and
    certification requires the kernel tail outside the window to be
    certified by the profile.
    """
    if atom.flavor != "strong":
        raise ValueError("moment check applies to moment-killed atoms")
    k = int(math.floor(1.0 / atom.p))
    if pad is None:
        radius, certified = mult.certified_radius()
        pad = max(radius + 64, 256)
    else:
        _, certified = mult.certified_radius(cap=pad)
    out = multiplier_apply(atom.seq, mult, path="kernel", pad=pad).kernel
    n = (out.indices() - atom.n0).astype(float)
    l1 = lp_quasinorm(out, 1.0)
    values, tols = [], []
    for j in range(k):
        values.append(float(abs(np.sum(n ** j * out.values))))
        tols.append(tol * max(atom.r0, 1.0) ** j * l1)
    control = float(abs(np.sum(n ** k * out.values)))
    return MomentsReport(orders=tuple(range(k)), values=tuple(values),
                         tolerances=tuple(tols), control_order=k,
                         control_value=control, certified=certified)


def multiplier_molecule(mult: LaplaceMultiplier, atom: Atom,
                        pad: int | None = None) -> tuple[Molecule, MoleculeNorm]:
    """Image of an atom as a molecule with alpha = floor(1/p), plus its norm."""
    k = int(math.floor(1.0 / atom.p))
    if pad is None:
        radius, _ = mult.certified_radius()
        pad = max(radius + 64, 64 * int(atom.r0), 256)
    out = multiplier_apply(atom.seq, mult, path="kernel", pad=pad).kernel
    mol = Molecule(seq=out, n0=atom.n0, p=atom.p, q=atom.q, alpha=float(k))
    return mol, molecule_norm(mol)


# -- Hardy quasinorm surrogate ---------------------------------------------------


@dataclass(frozen=True)
class HardyEstimate:
    """Computable surrogate for the Hardy quasinorm.

    ``certified`` states that the measured transform decay makes the
    full quasinorm provably finite; ``tail_ratio`` quantifies how much
    of the windowed value the tail could still move.
    """

    value: float
    lp_part: float
    hilbert_part: float
    tail_exponent: float
    tail_ratio: float
    certified: bool


def _hilbert_tail(f: Sequence, p: float, pad: int) -> tuple[float, float, float]:
    """(||Hf||_p, decay slope, tail ratio) for one window size."""
    width = len(f.values)
    h = hilbert(f, pad=pad)
    lp_h = lp_quasinorm(h, p)
    center = f.offset + width // 2
    dist = np.abs(h.indices() - center).astype(float)
    mags = np.abs(h.values)
    outer = (dist >= 0.75 * dist.max()) & (mags > 0)
    if outer.sum() >= 4:
        slope = float(np.polyfit(np.log(dist[outer]), np.log(mags[outer]), 1)[0])
    else:
        slope = -math.inf
    if slope * p < -1.0:
        edge = float(mags[outer].max(initial=0.0))
        radius = float(dist.max())
        tail_p = (edge ** p) * radius / (-(slope * p) - 1.0)
        ratio = tail_p / max(lp_h ** p, 1e-300)
    else:
        ratio = math.inf
    return lp_h, slope, ratio


def hardy_quasinorm_estimate(f: Sequence, p: float,
                             pad: int | None = None,
                             tail_tol: float = 1e-3,
                             pad_cap: int = 1 << 18) -> HardyEstimate:
    """||f||_p + ||H f||_p with the transform tail certified empirically.

    The Hilbert image is computed on a widened window; its decay
    exponent, measured on the outer quarter, bounds the l^p mass
    outside.  When the measured decay is summable but the window is too
    small for the tolerance, the window grows (tail mass falls like
    pad^(1 + slope*p)) up to a cap.  Mean-carrying inputs decay like
    1/n, whose p-th power is never summable here, and stay uncertified.
    """
    if not (0 < p <= 1):
        raise ValueError("p must lie in (0, 1]")
    if len(f.values) == 0:
        return HardyEstimate(0.0, 0.0, 0.0, -math.inf, 0.0, True)
    width = len(f.values)
    chosen = pad if pad is not None else max(1024, 8 * width)
    lp_h, slope, ratio = _hilbert_tail(f, p, chosen)
    if pad is None and math.isfinite(ratio) and ratio > tail_tol:
        growth = 1.0 + slope * p  # tail mass ~ pad^growth, growth < 0
        factor = (ratio / (0.3 * tail_tol)) ** (1.0 / -growth)
        bigger = min(int(chosen * max(factor, 2.0)), pad_cap)
        if bigger > chosen:
            chosen = bigger
            lp_h, slope, ratio = _hilbert_tail(f, p, chosen)
    return HardyEstimate(value=lp_quasinorm(f, p) + lp_h,
                         lp_part=lp_quasinorm(f, p), hilbert_part=lp_h,
                         tail_exponent=slope, tail_ratio=float(ratio),
                         certified=bool(math.isfinite(ratio)))
