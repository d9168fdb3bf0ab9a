"""Assembly and verification of the full sets of angular profiles.

Profiles are built from one verified quarter or half orbit and extended by
the reflection symmetries of the phase plane, then checked against the
angular equation with finite-difference residuals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DomainError
from .fields import cartesian_rhs, p1_slope_rhs
from .integrate import EventSpec, IntegratorConfig, integrate
from .params import (
    ModeBounds,
    Nonlinearity,
    ProblemParams,
    ReducedParams,
    angular_eigenvalue,
    critical_potential,
    decay_exponent,
    mode_bounds,
    odd_power,
    power_nonlinearity,
    reduce_params,
    reduced_nonlinearity,
)
from .periods import find_amplitude_for_period
from .rootfind import invert_increasing

__all__ = [
    "AngularProfile",
    "ResidualReport",
    "ModeEntry",
    "SolutionSet",
    "SectorReport",
    "verify_profile",
    "reduced_residual_report",
    "p1_explicit",
    "build_solution_set",
    "sector_exists",
]


@dataclass(frozen=True)
class AngularProfile:
    """Sampled 2 pi periodic profile on a uniform grid (endpoint excluded)."""

    sigma: np.ndarray
    omega: np.ndarray
    k: int
    kind: str  # sign-changing | positive | constant | explicit

    def __post_init__(self):
        self.sigma.flags.writeable = False
        self.omega.flags.writeable = False


@dataclass(frozen=True)
class ResidualReport:
    max_residual: float
    l2_residual: float
    scale: float
    tol: float
    passed: bool
    n_excluded: int


@dataclass(frozen=True)
class ModeEntry:
    k: int
    amplitude: float
    period_target: float
    period_measured: float
    residual: ResidualReport
    profile: AngularProfile
    note: str = ""


@dataclass
class SolutionSet:
    """Assembled description of the angular solution sets."""

    params: ProblemParams
    constants: list[float]
    sign_changing: list[ModeEntry]
    positive: list[ModeEntry]
    explicit_families: list[dict]
    bounds: ModeBounds
    notes: list[str] = field(default_factory=list)

    def describe(self) -> dict:
        def entry(e: ModeEntry) -> dict:
            return {
                "k": e.k,
                "amplitude": e.amplitude,
                "period_target": e.period_target,
                "period_measured": e.period_measured,
                "residual_max": e.residual.max_residual,
                "residual_scale": e.residual.scale,
                "passed": e.residual.passed,
                "note": e.note,
            }

        return {
            "p": self.params.p,
            "q": self.params.q,
            "c": self.params.c,
            "constants": list(self.constants),
            "sign_changing": [entry(e) for e in self.sign_changing],
            "positive": [entry(e) for e in self.positive],
            "explicit_families": [
                {k: v for k, v in fam.items() if k != "profile"}
                for fam in self.explicit_families
            ],
            "mode_bounds": {
                "k_sign_changing_min": self.bounds.k_sign_changing_min,
                "positive_modes": list(self.bounds.positive_modes),
                "positive_nonconstant_exists": self.bounds.positive_nonconstant_exists,
                "mode_threshold": self.bounds.mode_threshold,
                "notes": _plain(self.bounds.notes),
            },
            "notes": list(self.notes),
        }


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return float(obj)
    return obj


def _fd1_periodic(values: np.ndarray, h: float) -> np.ndarray:
    """Fourth-order central first derivative on a periodic uniform grid."""
    vp1, vm1 = np.roll(values, -1), np.roll(values, 1)
    vp2, vm2 = np.roll(values, -2), np.roll(values, 2)
    return (-vp2 + 8.0 * vp1 - 8.0 * vm1 + vm2) / (12.0 * h)


def _angular_residual(values: np.ndarray, h: float, p: float, beta: float,
                      lam: float, cpot: float, g,
                      deriv: np.ndarray | None = None,
                      second: np.ndarray | None = None,
                      ) -> tuple[np.ndarray, np.ndarray, float]:
    """Residual of the generic angular equation on a periodic grid.

    Returns (residual, keep mask, term scale); a neighborhood of each zero of
    the profile is excluded when p != 2 since the flux degenerates there.
    Derivatives default to fourth-order finite differences; passing exact
    ``deriv``/``second`` arrays evaluates the equation algebraically (the
    flux derivative expanded by the chain rule), free of stencil noise.
    """
    om = values
    dom = _fd1_periodic(om, h) if deriv is None else np.asarray(deriv, dtype=float)
    base = beta * beta * om * om + dom * dom
    flux = base ** (p / 2.0 - 1.0) * dom
    if second is None:
        dflux = _fd1_periodic(flux, h)
    else:
        ddom = np.asarray(second, dtype=float)
        dflux = base ** (p / 2.0 - 1.0) * ddom \
            + (p - 2.0) * base ** (p / 2.0 - 2.0) \
            * (beta * beta * om * dom + dom * ddom) * dom
    t_lin = lam * base ** (p / 2.0 - 1.0) * om
    t_src = g(om)
    t_pot = cpot * odd_power(om, p - 1.0)
    residual = dflux + t_lin + t_src - t_pot

    keep = np.ones(len(om), dtype=bool)
    if p != 2.0:
        scale_om = np.max(np.abs(om))
        crossings = np.nonzero(np.sign(om) != np.sign(np.roll(om, -1)))[0]
        near_zero = np.nonzero(np.abs(om) < 1e-3 * scale_om)[0]
        bad = set()
        width = 4
        for idx in list(crossings) + list(near_zero):
            for j in range(idx - width, idx + width + 2):
                bad.add(j % len(om))
        keep[list(bad)] = False
    with np.errstate(invalid="ignore"):
        residual = np.where(np.isfinite(residual), residual, np.inf)
    scale = max(np.max(np.abs(dflux[keep])), np.max(np.abs(t_lin[keep])),
                np.max(np.abs(t_src[keep])), np.max(np.abs(t_pot[keep])), 1e-300)
    return residual, keep, float(scale)


def verify_profile(profile: AngularProfile, params: ProblemParams,
                   tol: float = 1e-5) -> ResidualReport:
    """Finite-difference residual of the angular equation for the profile.

    Requires at least 2048 uniform samples per least period; passes when the
    scaled max residual over the smooth arcs is below tol.
    """
    n = len(profile.sigma)
    if n < 2048 * profile.k:
        raise DomainError(
            f"grid too coarse: {n} points gives {n / profile.k:.0f} per least period")
    h = profile.sigma[1] - profile.sigma[0]
    if not np.allclose(np.diff(profile.sigma), h, rtol=1e-9, atol=1e-12):
        raise DomainError("profile grid must be uniform")
    p, q, c = params.p, params.q, params.c
    beta = decay_exponent(p, q)
    lam = angular_eigenvalue(p, q)
    residual, keep, scale = _angular_residual(
        profile.omega, h, p, beta, lam, c, lambda s: odd_power(s, q))
    mx = float(np.max(np.abs(residual[keep])))
    l2 = float(np.sqrt(np.mean(residual[keep] ** 2)))
    return ResidualReport(mx, l2, scale, tol, mx < tol * scale,
                          int(np.sum(~keep)))


def reduced_residual_report(tau: np.ndarray, w: np.ndarray, rp: ReducedParams,
                            nl: Nonlinearity, tol: float = 1e-5,
                            w_prime: np.ndarray | None = None,
                            w_second: np.ndarray | None = None) -> ResidualReport:
    """Residual of the reduced profile equation for a periodic w(tau) grid.

    Exact derivative arrays, when supplied, turn this into an algebraic
    identity check at roundoff level.
    """
    h = tau[1] - tau[0]
    residual, keep, scale = _angular_residual(
        np.asarray(w, dtype=float), h, rp.p, 1.0, -rp.b, rp.d, nl.f,
        deriv=w_prime, second=w_second)
    mx = float(np.max(np.abs(residual[keep])))
    l2 = float(np.sqrt(np.mean(residual[keep] ** 2)))
    return ResidualReport(mx, l2, scale, tol, mx < tol * scale,
                          int(np.sum(~keep)))


def p1_explicit(family, q: float, n: int = 4096) -> AngularProfile:
    """Closed-form p = 1 profiles: a turning parameter K in (0, 1) gives the
    positive two-parameter family, "omega0" the sign-changing profile
    (q <= 1), "omega0plus" its positive counterpart (q < 1)."""
    sigma = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    if isinstance(family, (int, float)):
        K = float(family)
        if not 0.0 < K < 1.0:
            raise DomainError("K must lie in (0, 1)")
        w = np.sqrt(1.0 - K * K * np.sin(sigma) ** 2) - K * np.cos(sigma)
        return AngularProfile(sigma, w ** (1.0 / q), 1, "explicit")
    if family == "omega0":
        if q > 1.0:
            raise DomainError("the sign-changing explicit profile needs q <= 1")
        om = 2.0 ** (1.0 / q) * odd_power(np.sin(sigma), 1.0 / q)
        return AngularProfile(sigma, om, 1, "explicit")
    if family == "omega0plus":
        if q >= 1.0:
            raise DomainError("the positive limiting profile needs q < 1")
        om = (2.0 * np.abs(np.sin(sigma))) ** (1.0 / q)
        return AngularProfile(sigma, om, 2, "explicit")
    raise DomainError(f"unknown family {family!r}")


def _fold_quarter(dense_traj, tau_quarter: float, taus: np.ndarray) -> np.ndarray:
    """Evaluate a full sign-changing period from one quarter via the
    reflections (w, y) -> (w, -y) and (w, y) -> (-w, -y)."""
    T = 4.0 * tau_quarter
    tt = np.mod(taus, T)
    w = np.empty_like(tt)
    for i, t in enumerate(tt):
        if t <= tau_quarter:
            s, sign = t, 1.0
        elif t <= 2.0 * tau_quarter:
            s, sign = 2.0 * tau_quarter - t, 1.0
        elif t <= 3.0 * tau_quarter:
            s, sign = t - 2.0 * tau_quarter, -1.0
        else:
            s, sign = T - t, -1.0
        w[i] = sign * dense_traj.sample([s])[0, 0]
    return w


def _fold_half(dense_traj, tau_half: float, taus: np.ndarray) -> np.ndarray:
    """Evaluate a full positive period from the upper half orbit."""
    T = 2.0 * tau_half
    tt = np.mod(taus, T)
    w = np.empty_like(tt)
    for i, t in enumerate(tt):
        s = t if t <= tau_half else T - t
        w[i] = dense_traj.sample([s])[0, 0]
    return w


def _sc_mode_entry(k: int, params: ProblemParams, rp, nl, cfg, points_per_period: int):
    beta = decay_exponent(params.p, params.q)
    t_k = 2.0 * math.pi * beta / k
    nu = find_amplitude_for_period(t_k, "sign-changing", rp, nl, cfg)[0]
    rhs = cartesian_rhs(rp, nl)
    traj = integrate(rhs, (0.0, nu), (0.0, 2.0 * t_k),
                     events=[EventSpec("y=0", lambda t, s: s[1],
                                       terminal=True, direction=-1)],
                     cfg=cfg, dense=True)
    tau_q = traj.events[-1].tau
    n = points_per_period * k
    sigma = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    w = _fold_quarter(traj, tau_q, beta * sigma)
    omega = beta**beta * w
    profile = AngularProfile(sigma, omega, k, "sign-changing")
    residual = verify_profile(profile, params)
    return ModeEntry(k, nu, t_k, 4.0 * tau_q, residual, profile)


def _pos_mode_entry(k: int, params: ProblemParams, rp, nl, cfg, points_per_period: int):
    beta = decay_exponent(params.p, params.q)
    t_k = 2.0 * math.pi * beta / k
    roots = find_amplitude_for_period(t_k, "positive", rp, nl, cfg)
    note = "" if len(roots) == 1 else f"{len(roots)} amplitude roots; using the first"
    mu = roots[0]
    rhs = cartesian_rhs(rp, nl)
    traj = integrate(rhs, (mu, 0.0), (0.0, 2.0 * t_k),
                     events=[EventSpec("y=0", lambda t, s: s[1],
                                       terminal=True, direction=-1)],
                     cfg=cfg, dense=True)
    tau_h = traj.events[-1].tau
    n = points_per_period * k
    sigma = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    w = _fold_half(traj, tau_h, beta * sigma)
    omega = beta**beta * w
    profile = AngularProfile(sigma, omega, k, "positive")
    residual = verify_profile(profile, params)
    return ModeEntry(k, mu, t_k, 2.0 * tau_h, residual, profile, note)


def _p1_mode_entry(k: int, params: ProblemParams, rp, nl, cfg, points_per_period: int):
    q = params.q
    t_k = 2.0 * math.pi / k
    mu = find_amplitude_for_period(t_k, "positive", rp, nl, cfg)[0]
    rhs = p1_slope_rhs(rp, nl)
    traj = integrate(rhs, (mu, 0.0), (0.0, 2.0 * t_k),
                     events=[EventSpec("u=0", lambda t, s: s[1],
                                       terminal=True, direction=-1)],
                     cfg=cfg, dense=True)
    tau_h = traj.events[-1].tau
    n = points_per_period * k
    sigma = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    w = _fold_half(traj, tau_h, sigma)
    profile = AngularProfile(sigma, w ** (1.0 / q), k, "positive")
    residual = verify_profile(profile, params)
    return ModeEntry(k, mu, t_k, 2.0 * tau_h, residual, profile)


def build_solution_set(
    params: ProblemParams,
    cfg: IntegratorConfig | None = None,
    *,
    k_max: int | None = None,
    points_per_period: int = 2048,
    explicit_samples: Sequence[float] = (0.25, 0.5, 0.75),
) -> SolutionSet:
    """Assemble the constant, sign-changing, and positive profile families.

    Sign-changing modes form an infinite upward family; the scan stops at
    k_max (default: three modes above the threshold). Numeric failures are
    attached as notes, never silently dropped.
    """
    p, q, c = params.p, params.q, params.c
    if cfg is None:
        # finite differencing of the sampled profile amplifies dense-output
        # roughness, so profiles are built tighter than the default
        cfg = IntegratorConfig(rel_tol=1e-12, abs_tol=1e-14)
    bounds = mode_bounds(params)
    notes = [
        "reduced-period convention: mode k uses the w-period 2 pi beta / k, "
        "the reading forced by least angular period 2 pi / k",
    ]
    constants: list[float] = []
    sign_changing: list[ModeEntry] = []
    positive: list[ModeEntry] = []
    families: list[dict] = []

    if p > 1.0:
        rp = reduce_params(params)
        nl = reduced_nonlinearity(params)
        cq = critical_potential(p, q)
        if c > cq:
            constants.append((c - cq) ** (1.0 / (q + 1.0 - p)))
        k_lo = bounds.k_sign_changing_min
        k_hi = k_max if k_max is not None else k_lo + 2
        for k in range(k_lo, k_hi + 1):
            try:
                sign_changing.append(
                    _sc_mode_entry(k, params, rp, nl, cfg, points_per_period))
            except Exception as exc:
                notes.append(f"sign-changing mode {k} failed: {exc}")
        for k in bounds.positive_modes:
            try:
                positive.append(
                    _pos_mode_entry(k, params, rp, nl, cfg, points_per_period))
            except Exception as exc:
                notes.append(f"positive mode {k} failed: {exc}")
        return SolutionSet(params, constants, sign_changing, positive,
                           families, bounds, notes)

    # p = 1
    rp = reduce_params(params)
    nl = power_nonlinearity(1.0, 1.0)
    if c > -1.0:
        constants.append((c + 1.0) ** (1.0 / q))
    if c == 0.0 and q <= 1.0:
        profile = p1_explicit("omega0", q, n=4 * points_per_period)
        families.append({"family": "omega0", "q": q, "kind": "sign-changing",
                         "profile": profile})
    if c == 0.0:
        for K in explicit_samples:
            profile = p1_explicit(K, q, n=4 * points_per_period)
            families.append({"family": "omega_K_plus", "K": K, "q": q,
                             "kind": "positive", "profile": profile})
        notes.append("c = 0: two-parameter positive family omega_K, K in (0, 1)")
        if q < 1.0:
            profile = p1_explicit("omega0plus", q, n=4 * points_per_period)
            families.append({"family": "omega0plus", "q": q, "kind": "positive",
                             "profile": profile})
    for k in bounds.positive_modes:
        try:
            positive.append(_p1_mode_entry(k, params, rp, nl, cfg, points_per_period))
        except Exception as exc:
            notes.append(f"positive mode {k} failed: {exc}")
    if "literal_reading" in bounds.notes:
        notes.append(f"literal printed mode bounds: {bounds.notes['literal_reading']}"
                     " (period-derived bounds used instead)")
    return SolutionSet(params, constants, sign_changing, positive,
                       families, bounds, notes)


@dataclass(frozen=True)
class SectorReport:
    theta: float
    k_geom: float
    beta_s: float
    beta_q: float
    exists: bool
    unconditional: bool
    notes: str = ""


def sector_exists(p: float, q: float, theta: float) -> SectorReport:
    """Existence of a positive separable profile on an angular sector.

    beta_s is the positive root of (s-1) x^2 + (s (p-2)/(p-1) - 2) x - 1 with
    s = (1 + theta/pi)^2 read through k = pi/theta; existence holds iff the
    problem exponent stays strictly below it.
    """
    if not 0.0 < theta < 2.0 * math.pi:
        raise DomainError("sector opening must lie in (0, 2 pi)")
    if p <= 1.0:
        raise DomainError("the sector predicate needs p > 1")
    beta = decay_exponent(p, q)
    k = math.pi / theta
    s = (1.0 + 1.0 / k) ** 2
    A = s - 1.0
    B = s * (p - 2.0) / (p - 1.0) - 2.0
    disc = math.sqrt(B * B + 4.0 * A)
    beta_s = (-B + disc) / (2.0 * A) if B <= 0.0 else 2.0 / (B + disc)
    unconditional = p < 2.0 and q >= 2.0 * (p - 1.0) / (2.0 - p)
    return SectorReport(
        theta=theta, k_geom=k, beta_s=beta_s, beta_q=beta,
        exists=beta < beta_s, unconditional=unconditional,
        notes="quadratic grouped so the squared affine term sits outside the "
              "aperture factor; the other grouping has no positive root at p = 2",
    )
