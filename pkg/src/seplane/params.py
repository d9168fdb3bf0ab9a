"""Scalar constants, canonical reductions, and slope-chart functions.

Everything here is a pure evaluation: the exponents and thresholds derived
from a problem triple (p, q, c), the reduced coefficients (b, d) of the
autonomous profile equation, and the strictly monotone functions that drive
the slope-chart dynamics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad

from .errors import DomainError
from .rootfind import invert_increasing

__all__ = [
    "ProblemParams",
    "ReducedParams",
    "Nonlinearity",
    "ModeBounds",
    "decay_exponent",
    "angular_eigenvalue",
    "critical_potential",
    "power_nonlinearity",
    "reduce_params",
    "reduced_nonlinearity",
    "lift_profile",
    "slope_potential",
    "slope_potential_deriv",
    "slope_potential_min",
    "invert_slope_potential",
    "slope_map",
    "slope_map_deriv",
    "slope_map_inv",
    "slope_map_primitive",
    "damping_coefficient",
    "mode_threshold",
    "mode_threshold_zero_c",
    "mode_bounds",
    "odd_power",
    "stationary_abscissa",
]

QUAD_ABS_TOL = 1e-10


def odd_power(s, e):
    """sign(s) * |s|**e, the odd extension of the power; 0 at 0 for e > 0."""
    s = np.asarray(s, dtype=float)
    out = np.sign(s) * np.abs(s) ** e
    if out.ndim == 0:
        return float(out)
    return out


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def decay_exponent(p: float, q: float) -> float:
    """Radial decay exponent p/(q+1-p) of the separable ansatz; positive."""
    _require(q > p - 1.0, f"need q > p - 1, got p={p}, q={q}")
    return p / (q + 1.0 - p)


def angular_eigenvalue(p: float, q: float) -> float:
    """Coefficient of the degenerate linear term in the profile equation."""
    beta = decay_exponent(p, q)
    return beta * (q * beta - 2.0)


def critical_potential(p: float, q: float) -> float:
    """Potential threshold: nonzero constant profiles exist iff c exceeds it."""
    _require(q > p - 1.0, f"need q > p - 1, got p={p}, q={q}")
    return p ** (p - 1.0) * ((p - 2.0) * q + 2.0 * (p - 1.0)) / (q + 1.0 - p) ** p


@dataclass(frozen=True)
class ProblemParams:
    """User-facing triple (p, q, c) of the quasilinear equation."""

    p: float
    q: float
    c: float = 0.0

    def __post_init__(self):
        for name in ("p", "q", "c"):
            _require(math.isfinite(getattr(self, name)), f"{name} must be finite")
        _require(self.p >= 1.0, f"need p >= 1, got {self.p}")
        _require(self.q > self.p - 1.0, f"need q > p - 1, got p={self.p}, q={self.q}")


@dataclass(frozen=True)
class ReducedParams:
    """Coefficients (p, q, b, d) of the canonical autonomous profile equation."""

    p: float
    q: float
    b: float
    d: float

    def __post_init__(self):
        for name in ("p", "q", "b", "d"):
            _require(math.isfinite(getattr(self, name)), f"{name} must be finite")
        _require(self.p >= 1.0, f"need p >= 1, got {self.p}")
        _require(self.q > self.p - 1.0, f"need q > p - 1, got p={self.p}, q={self.q}")


@dataclass(frozen=True)
class Nonlinearity:
    """Source term bundle: f, its derivative, antiderivative F with F(0)=0,
    the ratio h(s) = f(s)/|s|^(p-2)s, and the inverse of h on (0, inf).

    ``power`` carries the exponent when f is a pure power (None otherwise);
    ``h_tilde`` is h read in the regularized variable v = w^(q+1-p).
    """

    f: Callable[[float], float]
    fprime: Callable[[float], float]
    F: Callable[[float], float]
    h: Callable[[float], float]
    h_inverse: Callable[[float], float]
    h_tilde: Callable[[float], float] | None = None
    power: float | None = None


def power_nonlinearity(p: float, q: float) -> Nonlinearity:
    """The pure power source |s|^(q-1) s with its derived functions."""
    _require(q > p - 1.0, f"need q > p - 1, got p={p}, q={q}")
    e = q + 1.0 - p

    def f(s):
        return odd_power(s, q)

    def fprime(s):
        if s == 0.0:
            return 0.0 if q > 1.0 else (1.0 if q == 1.0 else math.inf)
        return q * abs(s) ** (q - 1.0)

    def F(s):
        return abs(s) ** (q + 1.0) / (q + 1.0)

    def h(s):
        return odd_power(s, e)

    def h_inverse(t):
        return odd_power(t, 1.0 / e)

    return Nonlinearity(f=f, fprime=fprime, F=F, h=h, h_inverse=h_inverse,
                        h_tilde=lambda v: v, power=q)


def reduce_params(params: ProblemParams) -> ReducedParams:
    """Canonical reduced coefficients (b, d); b + d > 0 iff c exceeds the
    critical potential."""
    p, q, c = params.p, params.q, params.c
    if p == 1.0:
        return ReducedParams(p=1.0, q=q, b=1.0, d=c)
    beta = decay_exponent(p, q)
    lam = angular_eigenvalue(p, q)
    return ReducedParams(p=p, q=q, b=-lam / beta**2, d=c / beta**p)


def reduced_nonlinearity(params: ProblemParams) -> Nonlinearity:
    """Source term of the reduced equation; at p = 1 the reduction
    normalizes the power to the identity."""
    if params.p == 1.0:
        return power_nonlinearity(1.0, 1.0)
    return power_nonlinearity(params.p, params.q)


def stationary_abscissa(rp: ReducedParams, nl: Nonlinearity) -> float:
    """Abscissa a = h^{-1}(b+d) of the phase-plane center; requires b+d > 0."""
    _require(rp.b + rp.d > 0.0, "no stationary point when b + d <= 0")
    return nl.h_inverse(rp.b + rp.d)


def lift_profile(tau, w, params: ProblemParams, period: float | None = None):
    """Map a sampled reduced profile w(tau) to the angular profile omega(sigma).

    ``period`` declares the least period of w; a tau grid that does not cover
    it is rejected.
    """
    tau = np.asarray(tau, dtype=float)
    w = np.asarray(w, dtype=float)
    if tau.shape != w.shape:
        raise DomainError("tau and w grids must have matching shapes")
    if period is not None:
        span = tau[-1] - tau[0]
        if span < period * (1.0 - 1e-9):
            raise DomainError(f"tau span {span} does not cover one period {period}")
    p, q = params.p, params.q
    if p == 1.0:
        # beta*q = 1, so sigma = tau and omega = |w|^(1/q - 1) w
        return tau.copy(), odd_power(w, 1.0 / q)
    beta = decay_exponent(p, q)
    return tau / beta, beta**beta * w


def slope_potential(xi, p: float, b: float):
    """((p-1) xi^2 - b)(1 + xi^2)^(p/2 - 1); its roots are the slopes of
    orbits entering the origin."""
    xi = np.asarray(xi, dtype=float)
    val = ((p - 1.0) * xi**2 - b) * (1.0 + xi**2) ** (p / 2.0 - 1.0)
    return float(val) if val.ndim == 0 else val


def slope_potential_deriv(xi, p: float, b: float):
    xi = np.asarray(xi, dtype=float)
    val = (p * (p - 1.0) * xi**2 + 2.0 * (p - 1.0) - (p - 2.0) * b) \
        * (1.0 + xi**2) ** ((p - 4.0) / 2.0) * xi
    return float(val) if val.ndim == 0 else val


def slope_potential_min(p: float, b: float) -> tuple[float, float] | None:
    """Interior minimum (eta, value) of the slope potential, or None when
    the function is increasing on (0, inf)."""
    _require(p > 1.0, "interior minimum is defined for p > 1 only")
    gap = (p - 2.0) * b - 2.0 * (p - 1.0)
    if gap <= 0.0:
        return None
    eta = math.sqrt(gap / (p * (p - 1.0)))
    emin = -(2.0 * (p - 1.0) / (p - 2.0)) \
        * ((p - 2.0) * (b + p - 1.0) / (p * (p - 1.0))) ** (p / 2.0)
    return eta, emin


def invert_slope_potential(value: float, p: float, b: float, *, xtol: float = 1e-12) -> float:
    """Root of the slope potential on its increasing branch (xi > eta when an
    interior minimum exists)."""
    mn = slope_potential_min(p, b) if p > 1.0 else None
    lo = mn[0] if mn is not None else 0.0
    floor = mn[1] if mn is not None else slope_potential(0.0, p, b)
    if value < floor - 1e-13 * (1.0 + abs(floor)):
        raise DomainError(f"value {value} below the minimum {floor} of the slope potential")
    if value <= floor:
        return lo
    return invert_increasing(lambda x: slope_potential(x, p, b), value, lo, xtol=xtol)


def slope_map(xi, p: float):
    """u = (1 + xi^2)^((p-2)/2) xi, strictly increasing in the slope xi."""
    xi = np.asarray(xi, dtype=float)
    val = (1.0 + xi**2) ** ((p - 2.0) / 2.0) * xi
    return float(val) if val.ndim == 0 else val


def slope_map_deriv(xi, p: float):
    xi = np.asarray(xi, dtype=float)
    val = (1.0 + xi**2) ** ((p - 4.0) / 2.0) * (1.0 + (p - 1.0) * xi**2)
    return float(val) if val.ndim == 0 else val


def slope_map_inv(u: float, p: float, *, xtol: float = 1e-12) -> float:
    """Slope xi recovering u under the slope map; closed form at p in {1, 2},
    monotone root-find otherwise."""
    if u == 0.0:
        return 0.0
    sign = 1.0 if u > 0.0 else -1.0
    a = abs(u)
    if p == 2.0:
        return sign * a
    if p == 1.0:
        _require(a < 1.0, f"the p=1 slope map has range (-1, 1); got |u| = {a}")
        return sign * a / math.sqrt(1.0 - a * a)
    return sign * invert_increasing(lambda x: slope_map(x, p), a, 0.0, xtol=xtol)


def slope_map_primitive(u: float, p: float) -> float:
    """Integral of the inverse slope map from 0 to u (even in u).

    Computed by the exact integration-by-parts identity
    u*xi - ((1+xi^2)^(p/2) - 1)/p with xi the inverse image of |u|.
    """
    a = abs(u)
    if a == 0.0:
        return 0.0
    if p == 2.0:
        return a * a / 2.0
    if p == 1.0:
        _require(a < 1.0, "the p=1 slope map has range (-1, 1)")
        return 1.0 - math.sqrt(1.0 - a * a)
    xi = slope_map_inv(a, p)
    return a * xi - ((1.0 + xi * xi) ** (p / 2.0) - 1.0) / p


def damping_coefficient(xi, p: float, q: float, b: float):
    """Coefficient of u' in the second-order equation for the transformed
    slope; vanishes identically when b = 1 and q = 2p - 1."""
    _require(p > 1.0, "defined for p > 1")
    xi = np.asarray(xi, dtype=float)
    num = (p - 2.0) * b + q - 3.0 * (p - 1.0) + (q + 1.0 - 2.0 * p) * (p - 1.0) * xi**2
    val = num / (1.0 + (p - 1.0) * xi**2) * xi
    return float(val) if val.ndim == 0 else val


def mode_threshold(params: ProblemParams, *, abs_tol: float = QUAD_ABS_TOL) -> float:
    """Lower mode threshold for sign-changing profiles when c <= c_q.

    Computed as pi*beta^(1-p) / (2 I) with I the quadrature of the angular
    time integrand over (0, pi/2); 0 at c = c_q where the underlying limit
    period diverges.
    """
    p, q, c = params.p, params.q, params.c
    _require(p > 1.0, "mode threshold is defined for p > 1")
    cq = critical_potential(p, q)
    if c > cq:
        raise DomainError(f"mode threshold needs c <= c_q, got c={c} > c_q={cq}")
    if c == cq:
        return 0.0
    beta = decay_exponent(p, q)
    bp = beta**p

    def integrand(theta):
        t = math.tan(theta)
        return (1.0 + (p - 1.0) * t * t) / (
            bp * (p - 1.0) * t * t + cq - c * math.cos(theta) ** (p - 2.0))

    val, _ = quad(integrand, 0.0, math.pi / 2.0, epsabs=abs_tol, epsrel=1e-12, limit=400)
    return math.pi * beta ** (1.0 - p) / (2.0 * val)


def mode_threshold_zero_c(p: float, q: float) -> float:
    """Closed form of the mode threshold at c = 0 (2/(q-1) at p = 2)."""
    _require(p > 1.0, "defined for p > 1")
    _require(q > p - 1.0, "need q > p - 1")
    if p == 2.0:
        return 2.0 / (q - 1.0)
    msq = (2.0 * (p - 1.0) + (p - 2.0) * q) / (p * (p - 1.0))
    _require(msq >= 0.0, "no finite threshold: c = 0 exceeds the critical potential here")
    m = math.sqrt(msq)
    return (p - 2.0) * m / (((p - 1.0) * m + 1.0) * (m - 1.0)) if m != 0.0 else 0.0


def _snap(x: float, tol: float = 1e-9) -> float:
    r = round(x)
    return float(r) if abs(x - r) < tol else x


def _largest_int_below(x: float) -> int:
    x = _snap(x)
    k = math.floor(x)
    return k - 1 if float(k) == x else k


def _smallest_int_above(x: float) -> int:
    x = _snap(x)
    return math.floor(x) + 1


@dataclass(frozen=True)
class ModeBounds:
    """Integer mode ranges for sign-changing and positive profiles."""

    k_sign_changing_min: int | None
    positive_modes: tuple[int, ...]
    positive_nonconstant_exists: bool
    mode_threshold: float | None
    notes: dict


def mode_bounds(params: ProblemParams) -> ModeBounds:
    """Admissible integer modes k (profiles of least angular period 2 pi / k)."""
    p, q, c = params.p, params.q, params.c
    notes: dict = {}
    if p > 1.0:
        cq = critical_potential(p, q)
        beta = decay_exponent(p, q)
        if c >= cq:
            k_sc, mq = 1, None
        else:
            mq = mode_threshold(params)
            k_sc = _smallest_int_above(mq)
        excess = c - cq
        exists = excess > beta ** (p - 1.0) / p
        if exists:
            k_plus = _largest_int_below(math.sqrt(p * beta ** (1.0 - p) * excess))
            positive = tuple(range(1, k_plus + 1))
        else:
            positive = ()
        notes["positive_mode_cap"] = "largest integer strictly below sqrt(p beta^(1-p)(c - c_q))"
        return ModeBounds(k_sc, positive, exists, mq, notes)

    # p = 1: positive modes exist for c > 0, between the two period endpoints
    k_sc = 1 if (c == 0.0 and q <= 1.0) else None
    if c > 0.0:
        quarter, _ = quad(lambda t: math.sqrt(math.cos(t) / (math.cos(t) + 2.0 * c)),
                          0.0, math.pi / 2.0, epsabs=QUAD_ABS_TOL, limit=200)
        lower = math.sqrt(1.0 + c)
        upper = math.pi / (2.0 * quarter)
        lo_k = _smallest_int_above(lower)
        hi_k = _largest_int_below(upper)
        positive = tuple(range(lo_k, hi_k + 1)) if hi_k >= lo_k else ()
        notes["period_derived_bounds"] = (lower, upper)
        # alternative literal reading of the printed bounds, kept for traceability
        notes["literal_reading"] = {
            "k2_largest_below_sqrt_c_plus_1": _largest_int_below(lower),
            "k1_smallest_above_half_pi_times_integral": _smallest_int_above(
                math.pi / 2.0 * quarter),
        }
        return ModeBounds(k_sc, positive, bool(positive), None, notes)
    return ModeBounds(k_sc, (), False, None, notes)
