"""Period functions of the closed orbits and their closed-form limits.

Sign-changing periods come from quarter-orbit event timing, cross-checked by
an angular quadrature over the orbit itself; positive periods from half-orbit
timing; the p = 1 periods from the first-integral quadratures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.integrate import quad
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq

from .errors import DomainError, OutOfRangeError
from .fields import cartesian_rhs
from .integrate import EventSpec, IntegratorConfig, integrate
from .params import (
    Nonlinearity,
    ReducedParams,
    slope_potential_min,
    stationary_abscissa,
)

__all__ = [
    "PeriodSample",
    "PeriodLimits",
    "ScanResult",
    "period_sign_changing",
    "period_positive",
    "period_zero_amplitude_limit",
    "period_zero_amplitude_closed",
    "period_positive_p1",
    "period_infimum_p1",
    "p1_turning_from_amplitude",
    "period_scan",
    "find_amplitude_for_period",
    "period_limits",
]

QUAD_ABS_TOL = 1e-10


@dataclass(frozen=True)
class PeriodSample:
    """One measured least period at a given amplitude.

    ``cross_check`` carries the other method's value when both were run.
    """

    amplitude: float
    period: float
    method: str
    est_error: float
    cross_check: float | None = None


@dataclass(frozen=True)
class PeriodLimits:
    """Endpoints of a period function with the formula tags used."""

    at_zero: float
    at_upper: float
    formulas: tuple[str, ...]


@dataclass
class ScanResult:
    samples: list[PeriodSample]
    verdict: str
    max_violation: float
    notes: dict = field(default_factory=dict)


def _quarter_orbit(nu: float, rp: ReducedParams, nl: Nonlinearity,
                   cfg: IntegratorConfig | None, horizon: float = 1e4):
    """Dense quarter orbit from (0, nu) to its first y = 0 crossing."""
    rhs = cartesian_rhs(rp, nl)
    traj = integrate(rhs, (0.0, nu), (0.0, horizon),
                     events=[EventSpec("y=0", lambda t, s: s[1],
                                       terminal=True, direction=-1)],
                     cfg=cfg, dense=True)
    ev = traj.first_event("y=0")
    if ev is None:
        raise DomainError(f"no quarter-orbit crossing from (0, {nu})")
    return ev.tau, traj


def _theta_form_denominator(t: float, costheta: float, p: float, b: float,
                            d: float, hval: float) -> float:
    return (p - 1.0) * t * t - b + (hval - d) * costheta ** (p - 2.0)


def period_sign_changing(
    nu: float,
    rp: ReducedParams,
    nl: Nonlinearity,
    cfg: IntegratorConfig | None = None,
    *,
    method: str = "both",
    n_interp: int = 1500,
) -> PeriodSample:
    """Least period of the sign-changing orbit through (0, nu).

    Event timing measures a quarter and multiplies by four; the quadrature
    route integrates the angular time element over the same quarter, with the
    orbit radius interpolated monotonically in the polar angle.
    """
    if rp.p <= 1.0:
        raise DomainError("sign-changing periods run the p > 1 phase plane")
    if nu <= 0.0:
        raise DomainError("need nu > 0")
    tau_q, traj = _quarter_orbit(nu, rp, nl, cfg)
    period_ev = 4.0 * tau_q
    err_ev = 4.0 * max((cfg or IntegratorConfig()).event_tol,
                       1e-9 * tau_q)
    if method == "event-timing":
        return PeriodSample(nu, period_ev, "event-timing", err_ev)

    taus = np.linspace(0.0, tau_q, n_interp)
    wy = traj.sample(taus)
    theta = np.arctan2(wy[:, 1], wy[:, 0])
    w = wy[:, 0]
    # theta decreases strictly along the quarter; flip for the interpolator
    order = np.argsort(theta)
    theta_s, w_s = theta[order], np.maximum(w[order], 0.0)
    theta_s, keep = np.unique(theta_s, return_index=True)
    w_of_theta = PchipInterpolator(theta_s, w_s[keep])
    p, b, d = rp.p, rp.b, rp.d

    def integrand(th):
        t = math.tan(th)
        if th <= theta_s[0]:
            wv = w_s[0]
        elif th >= theta_s[-1]:
            wv = 0.0
        else:
            wv = max(float(w_of_theta(th)), 0.0)
        den = _theta_form_denominator(t, math.cos(th), p, b, d, nl.h(wv))
        return (1.0 + (p - 1.0) * t * t) / den

    # near the separatrix the integrand spikes at the saddle slope; point
    # the adaptive rule at it and absorb its roundoff complaint into the
    # error estimate (the sampled orbit limits attainable smoothness there)
    spots = None
    mn = slope_potential_min(p, b)
    if b + d > 0.0 or (mn is not None and mn[1] < d <= -b):
        from .params import invert_slope_potential

        spots = [math.atan(invert_slope_potential(d, p, b))]
    import warnings

    from scipy.integrate import IntegrationWarning

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", IntegrationWarning)
        val, est = quad(integrand, 0.0, math.pi / 2.0, epsabs=QUAD_ABS_TOL,
                        epsrel=1e-11, limit=400, points=spots)
    if any(issubclass(c.category, IntegrationWarning) for c in caught):
        est = max(est, 1e-8 * abs(val))
    period_quad = 4.0 * val
    sample_quad = PeriodSample(nu, period_quad, "quadrature", 4.0 * est + 1e-8)
    if method == "quadrature":
        return sample_quad
    return PeriodSample(nu, period_ev, "event-timing",
                        max(err_ev, abs(period_ev - period_quad)),
                        cross_check=period_quad)


def period_positive(
    mu: float,
    rp: ReducedParams,
    nl: Nonlinearity,
    cfg: IntegratorConfig | None = None,
) -> PeriodSample:
    """Least period of the positive orbit through (mu, 0), 0 < mu < a.

    These orbits never meet w = 0; reflection symmetry across the w axis
    makes the period twice the upper-half transit time.
    """
    if rp.p <= 1.0:
        raise DomainError("use period_positive_p1 at p = 1")
    if rp.b + rp.d <= 0.0:
        raise DomainError("positive orbits need b + d > 0")
    a = stationary_abscissa(rp, nl)
    if not 0.0 < mu < a:
        raise DomainError(f"need 0 < mu < a = {a}, got {mu}")
    rhs = cartesian_rhs(rp, nl)
    traj = integrate(rhs, (mu, 0.0), (0.0, 1e4),
                     events=[EventSpec("y=0", lambda t, s: s[1],
                                       terminal=True, direction=-1)], cfg=cfg)
    ev = traj.first_event("y=0")
    if ev is None:
        raise DomainError(f"no return crossing from ({mu}, 0)")
    half = ev.tau
    err = 2.0 * max((cfg or IntegratorConfig()).event_tol, 1e-9 * half)
    return PeriodSample(mu, 2.0 * half, "event-timing", err)


def period_zero_amplitude_limit(rp: ReducedParams, *, abs_tol: float = QUAD_ABS_TOL):
    """Zero-amplitude limit of the sign-changing period; finite iff b+d < 0,
    +inf at b+d = 0, valid when the slope potential is increasing or d sits
    below its minimum."""
    p, b, d = rp.p, rp.b, rp.d
    if p <= 1.0:
        raise DomainError("defined for p > 1")
    mn = slope_potential_min(p, b)
    if mn is None:
        if b + d > 0.0:
            raise DomainError("limit diverges when b + d > 0")
        if b + d == 0.0:
            return math.inf
    else:
        if d >= mn[1]:
            raise DomainError("limit diverges when d >= min of the slope potential")

    def integrand(th):
        t = math.tan(th)
        return (1.0 + (p - 1.0) * t * t) / _theta_form_denominator(
            t, math.cos(th), p, b, d, 0.0)

    val, _ = quad(integrand, 0.0, math.pi / 2.0, epsabs=abs_tol,
                  epsrel=1e-12, limit=400)
    return 4.0 * val


def period_zero_amplitude_closed(rp: ReducedParams) -> float:
    """Closed form of the zero-amplitude limit for b < 0, d = 0."""
    p, b = rp.p, rp.b
    if p <= 1.0 or b >= 0.0 or rp.d != 0.0:
        raise DomainError("closed form needs p > 1, b < 0, d = 0")
    gamma = math.sqrt(-b / (p - 1.0))
    return 2.0 * math.pi * ((p - 1.0) * gamma + 1.0) \
        / ((p - 1.0) * gamma * (gamma + 1.0))


# ---------------------------------------------------------------------------
# p = 1 periods via the first integral


def p1_turning_from_amplitude(mu: float, d: float) -> float:
    """Peak transformed slope u* of the b = 1 orbit through (mu, 0)."""
    amp = math.sqrt(max(mu * (2.0 * (d + 1.0) - mu), 0.0))
    s = 1.0 - (amp - d) ** 2
    if not -1e-12 <= s <= 1.0:
        raise DomainError(f"amplitude {mu} outside the admissible interval")
    return math.sqrt(max(s, 0.0))


def _p1_mubar(rp: ReducedParams, nl: Nonlinearity) -> float:
    """Left amplitude endpoint of the p = 1 positive family."""
    b, d = rp.b, rp.d
    if d <= 0.0:
        return 0.0
    a = stationary_abscissa(rp, nl)

    def H(w):
        if b == 0.0:
            return 1.0 + d * math.log(w) - w
        if b == -1.0:
            return (1.0 - d) / w - math.log(w)
        return (1.0 + d / b) * w**b - w ** (b + 1.0) / (b + 1.0)

    if b == 0.0:
        mprime = d * math.log(d) - d
    elif b == -1.0:
        mprime = -1.0 - math.log(d)
    else:
        mprime = d ** (b + 1.0) / (b * (b + 1.0))
    # H increases on (0, a) toward its peak; descend from a until H < M'
    lo = a
    for _ in range(2000):
        lo *= 0.5
        try:
            if H(lo) < mprime:
                break
        except OverflowError:
            break
    return brentq(lambda w: H(w) - mprime, lo, a, xtol=1e-14)


def period_positive_p1(
    mu: float,
    rp: ReducedParams,
    nl: Nonlinearity,
    cfg: IntegratorConfig | None = None,
    *,
    abs_tol: float = 1e-11,
) -> PeriodSample:
    """Least period of the p = 1 positive orbit through (mu, 0) by quadrature
    of the first integral; b = 1 uses the symmetric reduction, other b invert
    the two monotone branches of the transit function."""
    if rp.p != 1.0:
        raise DomainError("defined at p = 1")
    b, d = rp.b, rp.d
    if b + d <= 0.0:
        raise DomainError("positive orbits need b + d > 0")
    a = stationary_abscissa(rp, nl)
    mubar = _p1_mubar(rp, nl)
    if not mubar < mu < a:
        raise DomainError(f"need mu in ({mubar}, {a}), got {mu}")

    if b == 1.0:
        ustar = p1_turning_from_amplitude(mu, d)
        s = ustar * ustar
        root_s = math.sqrt(1.0 - s)

        # after lam = sin(phi) the (1 - lam^2) zero cancels exactly:
        # Psi(s, sin(phi)) = cos(phi)^2 (2d + A + B)/(A + B)
        def integrand(phi):
            a_root = math.sqrt(1.0 - s * math.sin(phi) ** 2)
            return math.sqrt((a_root + root_s) / (2.0 * d + a_root + root_s))

        val, est = quad(integrand, 0.0, math.pi / 2.0, epsabs=abs_tol,
                        epsrel=1e-12, limit=400)
        return PeriodSample(mu, 4.0 * val, "quadrature", 4.0 * est + 1e-10)

    period = _p1_two_branch_period(mu, rp, nl, abs_tol)
    return PeriodSample(mu, period, "quadrature", 1e-8)


def _transit_minus_one(z: float, b: float) -> float:
    """G(z) - 1 for the p = 1 transit function, stable for small z."""
    return math.expm1(b / (b + 1.0) * math.log1p(-z)
                      + math.log1p(b * z) / (b + 1.0))


def _invert_transit(qm1: float, b: float, branch: int) -> float:
    """z > 0 with G(sgn z) - 1 = qm1 on the requested monotone branch
    (branch 1 is the z < 0 side, returned as |z|)."""
    sgn = -1.0 if branch == 1 else 1.0
    g = lambda s: _transit_minus_one(sgn * s, b)
    if qm1 == 0.0:
        return 0.0
    if b > 0.0:
        zmax = 1.0 / b if branch == 1 else 1.0
    else:
        zmax = math.inf if branch == 1 else min(1.0, -1.0 / b)
    hi = 0.5 if not math.isfinite(zmax) else 0.5 * zmax
    for _ in range(200):
        gh = g(hi)
        if (qm1 < 0.0 and gh <= qm1) or (qm1 > 0.0 and gh >= qm1):
            break
        hi = 2.0 * hi if not math.isfinite(zmax) else hi + 0.5 * (zmax - hi)
        if math.isfinite(zmax) and zmax - hi < 1e-14 * zmax:
            break
    return brentq(lambda s: g(s) - qm1, 0.0, hi, xtol=1e-15)


def _p1_two_branch_period(mu: float, rp: ReducedParams, nl: Nonlinearity,
                          abs_tol: float) -> float:
    """General-b p = 1 period from the two monotone inverse branches."""
    b, d = rp.b, rp.d

    if b == 0.0:
        H = lambda w: 1.0 + d * math.log(w) - w
        ustar_sq = 1.0 - (1.0 + H(mu) - H(d)) ** 2
        if not 0.0 < ustar_sq <= 1.0:
            raise DomainError("amplitude outside the admissible interval")
        ustar = math.sqrt(ustar_sq)
        root_s = math.sqrt(1.0 - ustar_sq)

        def w_branch(drop, left):
            # solve H(d) - H(w) = drop > 0 on the requested side of d
            f = lambda w: (H(d) - H(w)) - drop
            if left:
                return brentq(f, 1e-300, d, xtol=1e-15)
            hi = 2.0 * d
            while H(d) - H(hi) < drop:
                hi *= 2.0
            return brentq(f, d, hi, xtol=1e-15)

        def integrand(phi, left):
            lam = math.sin(phi)
            a_root = math.sqrt(1.0 - lam * lam * ustar_sq)
            # H(d) - xi, written without cancellation
            drop = ustar_sq * math.cos(phi) ** 2 / (a_root + root_s)
            if drop <= 0.0:
                return 2.0 * ustar / math.sqrt(2.0 * d * ustar_sq / (2.0 * root_s))
            wv = w_branch(drop, left)
            return 2.0 * ustar * math.cos(phi) / abs(d - wv)

        t1, _ = quad(lambda ph: integrand(ph, True), 0.0, math.pi / 2.0,
                     epsabs=abs_tol, limit=300)
        t2, _ = quad(lambda ph: integrand(ph, False), 0.0, math.pi / 2.0,
                     epsabs=abs_tol, limit=300)
        return t1 + t2

    if b == -1.0:
        # first integral: d - sqrt(1-u^2) = (B+1) w - w ln w with B = -(C+1)
        if d <= 1.0:
            raise DomainError("b = -1 positive orbits need d > 1")
        c_val = first_integral_p1_value(mu, rp, nl)
        B = -(c_val + 1.0)
        wpeak = math.exp(B)
        ustar_sq = 1.0 - (d - wpeak) ** 2
        if not 0.0 < ustar_sq <= 1.0:
            raise DomainError("amplitude outside the admissible interval")
        ustar = math.sqrt(ustar_sq)
        root_s = math.sqrt(1.0 - ustar_sq)
        HB = lambda w: (B + 1.0) * w - w * math.log(w)

        def w_branch(drop, left):
            f = lambda w: (wpeak - HB(w)) - drop
            if left:
                return brentq(f, 1e-300, wpeak, xtol=1e-15)
            hi = 2.0 * wpeak
            while wpeak - HB(hi) < drop:
                hi *= 2.0
            return brentq(f, wpeak, hi, xtol=1e-15)

        def integrand(phi, left):
            lam = math.sin(phi)
            a_root = math.sqrt(1.0 - lam * lam * ustar_sq)
            # wpeak - (d - a_root) without cancellation
            drop = ustar_sq * math.cos(phi) ** 2 / (a_root + root_s)
            if drop <= 0.0:
                return 2.0 * math.sqrt(root_s / wpeak)
            wv = w_branch(drop, left)
            xi = d - a_root
            return 2.0 * ustar * math.cos(phi) / abs(xi - wv)

        t1, _ = quad(lambda ph: integrand(ph, True), 0.0, math.pi / 2.0,
                     epsabs=abs_tol, limit=300)
        t2, _ = quad(lambda ph: integrand(ph, False), 0.0, math.pi / 2.0,
                     epsabs=abs_tol, limit=300)
        return t1 + t2

    # b not in {0, -1}
    ustar = _p1_ustar_general(mu, rp, nl)
    s = ustar * ustar
    root_s = math.sqrt(1.0 - s)
    amp = d + b * root_s

    def integrand(phi, branch):
        lam = math.sin(phi)
        a_root = math.sqrt(1.0 - lam * lam * s)
        base = d + b * a_root
        # Q - 1 = (amp - base)/base without cancellation
        qm1 = -b * s * math.cos(phi) ** 2 / (base * (a_root + root_s))
        z = _invert_transit(qm1, b, branch)
        if z == 0.0:
            # analytic endpoint limit of cos(phi)/z
            return 2.0 * ustar / (base * math.sqrt(2.0 * s / (base * (a_root + root_s))))
        return 2.0 * ustar * math.cos(phi) / (base * z)

    t1, _ = quad(lambda ph: integrand(ph, 1), 0.0, math.pi / 2.0,
                 epsabs=abs_tol, limit=300)
    t2, _ = quad(lambda ph: integrand(ph, 2), 0.0, math.pi / 2.0,
                 epsabs=abs_tol, limit=300)
    return t1 + t2


def first_integral_p1_value(mu: float, rp: ReducedParams, nl: Nonlinearity) -> float:
    from .orbits import first_integral_p1

    return first_integral_p1((mu, 0.0), rp, nl)


def _p1_ustar_general(mu: float, rp: ReducedParams, nl: Nonlinearity) -> float:
    """Peak transformed slope on the p = 1 orbit through (mu, 0), general b,
    from conservation of the first integral."""
    from .orbits import first_integral_p1

    b, d = rp.b, rp.d
    c_val = first_integral_p1((mu, 0.0), rp, nl)
    # at the peak, w* = d + b sqrt(1-u*^2) and w*^b sqrt(1-u*^2) - S1 + dR = C

    def mismatch(us):
        root = math.sqrt(1.0 - us * us)
        wstar = d + b * root
        if wstar <= 0.0:
            return math.inf
        return first_integral_p1((wstar, us), rp, nl) - c_val

    # u* in (0, 1); mismatch decreasing in us near the solution
    lo, hi = 1e-12, 1.0 - 1e-12
    return brentq(mismatch, lo, hi, xtol=1e-14)


def period_infimum_p1(d: float, *, abs_tol: float = 1e-11,
                      check_forms: bool = True) -> float:
    """Infimum of the p = 1, b = 1 positive period function for d >= 0.

    Evaluated in the angular form; optionally asserts agreement with the
    equivalent slope-variable form (an exact substitution identity).
    """
    if d < 0.0:
        raise DomainError("defined for d >= 0")

    def integrand_theta(th):
        c = math.cos(th)
        return math.sqrt(c / (c + 2.0 * d))

    val, _ = quad(integrand_theta, 0.0, math.pi / 2.0, epsabs=abs_tol,
                  epsrel=1e-13, limit=400)
    t_theta = 4.0 * val
    if check_forms:
        def integrand_u(u):
            root = math.sqrt(max(1.0 - u * u, 0.0))
            return 1.0 / math.sqrt((d + root) ** 2 - d * d)

        val_u, _ = quad(integrand_u, 0.0, 1.0, epsabs=abs_tol, epsrel=1e-13,
                        limit=400, points=[1.0])
        t_u = 4.0 * val_u
        if abs(t_u - t_theta) > 1e-9 * max(1.0, t_theta):
            raise DomainError(
                f"slope and angular forms disagree: {t_u} vs {t_theta}")
    return t_theta


def period_limits(rp: ReducedParams, nl: Nonlinearity, kind: str) -> PeriodLimits:
    """Endpoints of the requested period function with formula tags."""
    p = rp.p
    if kind == "sign-changing":
        if p <= 1.0:
            raise DomainError("sign-changing limits run p > 1")
        mn = slope_potential_min(p, rp.b)
        divergent = rp.b + rp.d >= 0.0 if mn is None else rp.d >= mn[1]
        if divergent:
            return PeriodLimits(math.inf, 0.0, ("divergent-dichotomy",))
        t_d = period_zero_amplitude_limit(rp)
        tags = ["zero-amplitude-quadrature"]
        if rp.b < 0.0 and rp.d == 0.0:
            tags.append("zero-amplitude-closed-form")
        return PeriodLimits(t_d, 0.0, tuple(tags))
    if kind == "positive":
        if rp.b + rp.d <= 0.0:
            raise DomainError("positive orbits need b + d > 0")
        if p > 1.0:
            a = stationary_abscissa(rp, nl)
            upper = 2.0 * math.pi / math.sqrt(a * _hprime(a, rp, nl))
            return PeriodLimits(math.inf, upper, ("small-oscillation",))
        if rp.b == 1.0 and rp.d >= 0.0:
            return PeriodLimits(period_infimum_p1(rp.d),
                                2.0 * math.pi / math.sqrt(1.0 + rp.d),
                                ("p1-infimum", "small-oscillation"))
        return PeriodLimits(math.inf, 2.0 * math.pi / math.sqrt(rp.b + rp.d),
                            ("small-oscillation",))
    raise DomainError(f"unknown kind {kind!r}")


def _hprime(a: float, rp: ReducedParams, nl: Nonlinearity) -> float:
    if nl.power is not None:
        e = nl.power + 1.0 - rp.p
        return e * a ** (e - 1.0)
    step = 1e-6 * max(a, 1.0)
    return (nl.h(a + step) - nl.h(a - step)) / (2.0 * step)


def period_scan(
    kind: str,
    amplitudes: Sequence[float],
    rp: ReducedParams,
    nl: Nonlinearity,
    cfg: IntegratorConfig | None = None,
    *,
    method: str = "event-timing",
) -> ScanResult:
    """Evaluate the period on an amplitude grid and report monotonicity."""
    amplitudes = list(amplitudes)
    if not amplitudes:
        raise DomainError("empty amplitude grid")
    samples = []
    for amp in amplitudes:
        if kind == "sign-changing":
            samples.append(period_sign_changing(amp, rp, nl, cfg, method=method))
        elif kind == "positive":
            if rp.p == 1.0:
                samples.append(period_positive_p1(amp, rp, nl, cfg))
            else:
                samples.append(period_positive(amp, rp, nl, cfg))
        else:
            raise DomainError(f"unknown kind {kind!r}")
    periods = np.array([s.period for s in samples])
    diffs = np.diff(periods)
    spread = periods.max() - periods.min()
    if spread <= 1e-8 * abs(periods).max():
        verdict, violation = "constant", float(spread)
    elif np.all(diffs < 0.0):
        verdict, violation = "decreasing", 0.0
    elif np.all(diffs > 0.0):
        verdict, violation = "increasing", 0.0
    else:
        down = float(np.max(diffs[diffs >= 0.0], initial=0.0))
        up = float(np.max(-diffs[diffs <= 0.0], initial=0.0))
        verdict, violation = "none", max(down, up)
    return ScanResult(samples, verdict, violation)


def find_amplitude_for_period(
    t_target: float,
    kind: str,
    rp: ReducedParams,
    nl: Nonlinearity,
    cfg: IntegratorConfig | None = None,
    *,
    scan_points: int = 60,
) -> list[float]:
    """Amplitudes whose least period equals the target.

    Sign-changing periods are strictly decreasing, so a single bisected root
    is returned; positive periods are scanned and every bracketed root is
    polished (their monotonicity is not guaranteed in general).
    """
    if t_target <= 0.0:
        raise DomainError("need a positive target period")

    if kind == "sign-changing":
        try:
            supremum = period_zero_amplitude_limit(rp)
        except DomainError:
            supremum = math.inf  # divergent small-amplitude regime
        if t_target >= supremum:
            raise OutOfRangeError("target above the attainable periods",
                                  attained=(0.0, supremum))
        T = lambda nu: period_sign_changing(nu, rp, nl, cfg,
                                            method="event-timing").period
        lo = hi = 1.0
        t_lo = T(lo)
        for _ in range(60):
            if t_lo > t_target:
                break
            lo /= 4.0
            t_lo = T(lo)
        else:
            raise OutOfRangeError("target above the attainable periods",
                                  attained=(0.0, t_lo))
        t_hi = T(hi)
        for _ in range(60):
            if t_hi < t_target:
                break
            hi *= 4.0
            t_hi = T(hi)
        root = brentq(lambda nu: T(nu) - t_target, lo, hi, xtol=1e-12, rtol=1e-12)
        return [root]

    if kind != "positive":
        raise DomainError(f"unknown kind {kind!r}")

    if rp.p == 1.0:
        a = stationary_abscissa(rp, nl)
        mubar = _p1_mubar(rp, nl)
        lims = period_limits(rp, nl, "positive")
        if rp.b == 1.0 and rp.d == 0.0:
            raise DomainError("constant period function: amplitude undetermined")
        T = lambda mu: period_positive_p1(mu, rp, nl, cfg).period
        lo = mubar + 1e-9 * (a - mubar) if mubar > 0.0 else 1e-9 * a
        hi = a * (1.0 - 1e-9)
        t_lo, t_hi = T(lo), T(hi)
        lo_v, hi_v = sorted((t_lo, t_hi))
        if not lo_v <= t_target <= hi_v:
            raise OutOfRangeError("target outside the attainable periods",
                                  attained=(lo_v, hi_v))
        return [brentq(lambda mu: T(mu) - t_target, lo, hi, xtol=1e-13)]

    a = stationary_abscissa(rp, nl)
    T = lambda mu: period_positive(mu, rp, nl, cfg).period
    grid = a * (1.0 - np.geomspace(1e-6, 1.0 - 1e-4, scan_points))[::-1]
    vals = np.array([T(mu) for mu in grid])
    roots = []
    for i in range(len(grid) - 1):
        f0, f1 = vals[i] - t_target, vals[i + 1] - t_target
        if f0 == 0.0:
            roots.append(float(grid[i]))
        elif f0 * f1 < 0.0:
            roots.append(brentq(lambda mu: T(mu) - t_target,
                                grid[i], grid[i + 1], xtol=1e-12))
    if not roots:
        raise OutOfRangeError("target outside the scanned periods",
                              attained=(float(vals.min()), float(vals.max())))
    return roots
