"""Adaptive time stepping with dense output and event localization.

Chart-agnostic plumbing: the stepper advances any rhs(t, state) callable with
an embedded Runge-Kutta 5(4) pair, records sampled states, and polishes every
sign change of the registered scalar monitors on the step-local interpolant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np
from scipy.integrate import RK45, OdeSolution
from scipy.optimize import brentq

from .errors import (
    DomainError,
    IntegrationError,
    MaxStepsError,
    NoCrossingError,
    StepUnderflowError,
)

__all__ = [
    "IntegratorConfig",
    "EventSpec",
    "TrajEvent",
    "Trajectory",
    "integrate",
    "advance_to_axis",
]


@dataclass(frozen=True)
class IntegratorConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_step: float = math.inf
    max_steps: int = 10_000_000
    event_tol: float = 1e-12

    def __post_init__(self):
        for name in ("rel_tol", "abs_tol", "max_step", "event_tol"):
            if getattr(self, name) <= 0.0:
                raise DomainError(f"{name} must be positive")
        if self.max_steps <= 0:
            raise DomainError("max_steps must be positive")


DEFAULT_CONFIG = IntegratorConfig()


@dataclass(frozen=True)
class EventSpec:
    """Scalar monitor g(tau, state); an event is a root of g along the path.

    direction > 0 keeps only rising crossings, < 0 only falling, 0 both.
    """

    name: str
    fn: Callable[[float, np.ndarray], float]
    terminal: bool = False
    direction: int = 0


class TrajEvent(NamedTuple):
    tau: float
    kind: str
    state: np.ndarray


@dataclass
class Trajectory:
    """Sampled path of a flow in one chart, immutable once returned."""

    chart: str
    taus: np.ndarray
    states: np.ndarray
    events: list[TrajEvent]
    status: str
    dense: OdeSolution | None = None

    def __post_init__(self):
        self.taus.flags.writeable = False
        self.states.flags.writeable = False

    def sample(self, taus):
        if self.dense is None:
            raise DomainError("trajectory was recorded without dense output")
        return np.asarray(self.dense(np.asarray(taus, dtype=float))).T

    def first_event(self, kind: str) -> TrajEvent | None:
        for ev in self.events:
            if ev.kind == kind:
                return ev
        return None


def _crossed(g_old: float, g_new: float, direction: int) -> bool:
    if g_old == 0.0 or not (math.isfinite(g_old) and math.isfinite(g_new)):
        # starting on the locus is not a crossing
        return False
    if g_new != 0.0 and (g_old < 0.0) == (g_new < 0.0):
        return False
    rising = g_old < 0.0
    return direction == 0 or (direction > 0) == rising


def integrate(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    start,
    tau_span: tuple[float, float],
    events: Sequence[EventSpec] = (),
    cfg: IntegratorConfig | None = None,
    *,
    chart: str = "wy",
    dense: bool = False,
) -> Trajectory:
    """Advance the state over tau_span, localizing events to event_tol.

    Stops at the span end, at the first terminal event, or with an error at
    the step budget / step underflow.
    """
    cfg = cfg or DEFAULT_CONFIG
    t0, t1 = float(tau_span[0]), float(tau_span[1])
    y0 = np.atleast_1d(np.asarray(start, dtype=float)).copy()
    if t1 == t0:
        return Trajectory(chart, np.array([t0]), y0[None, :], [], "completed", None)

    solver = RK45(rhs, t0, y0, t1, rtol=cfg.rel_tol, atol=cfg.abs_tol,
                  max_step=cfg.max_step)
    span = abs(t1 - t0)
    backward = t1 < t0
    taus = [t0]
    states = [y0.copy()]
    interps = []
    recorded: list[TrajEvent] = []
    g_prev = [ev.fn(t0, y0) for ev in events]
    status = None

    for _ in range(cfg.max_steps):
        if solver.status == "finished":
            status = "completed"
            break
        try:
            solver.step()
        except Exception as exc:  # scipy raises on bad rhs values
            raise IntegrationError(f"step failed at tau={solver.t}: {exc}") from exc
        if solver.status == "failed":
            raise StepUnderflowError(f"step size underflow at tau={solver.t}")
        t_old, t, y = solver.t_old, solver.t, solver.y
        if abs(t - t_old) < 1e-14 * span:
            raise StepUnderflowError(f"step shrank below 1e-14 of the span at tau={t}")
        interp = solver.dense_output()

        hits = []
        g_now = [ev.fn(t, y) for ev in events]
        for i, ev in enumerate(events):
            if _crossed(g_prev[i], g_now[i], ev.direction):
                lo, hi = (t, t_old) if backward else (t_old, t)
                t_ev = brentq(lambda s, e=ev: e.fn(s, interp(s)), lo, hi,
                              xtol=cfg.event_tol)
                hits.append((t_ev, ev))
        hits.sort(key=lambda h: h[0], reverse=backward)

        stop = None
        for t_ev, ev in hits:
            s_ev = np.asarray(interp(t_ev), dtype=float)
            recorded.append(TrajEvent(t_ev, ev.name, s_ev))
            if ev.terminal:
                stop = (t_ev, s_ev)
                break
        if stop is not None:
            taus.append(stop[0])
            states.append(stop[1])
            interps.append(interp)
            status = "terminal-event"
            break
        taus.append(t)
        states.append(y.copy())
        interps.append(interp)
        g_prev = g_now
    else:
        raise MaxStepsError(f"exceeded {cfg.max_steps} steps over {tau_span}")

    sol = OdeSolution(np.asarray(taus), interps) if (dense and interps) else None
    for ev in recorded:
        ev.state.flags.writeable = False
    return Trajectory(chart, np.asarray(taus), np.asarray(states), recorded,
                      status, sol)


_AXES: dict[str, Callable[[float, np.ndarray], float]] = {
    "w=0": lambda t, s: s[0],
    "y=0": lambda t, s: s[1],
}


def advance_to_axis(
    rhs,
    start,
    axis,
    cfg: IntegratorConfig | None = None,
    *,
    tau_max: float = 1000.0,
) -> tuple[float, np.ndarray]:
    """First crossing time and state of a named locus.

    ``axis`` is "w=0", "y=0", or ("slope", eta) for the line y = eta*w.
    """
    cfg = cfg or DEFAULT_CONFIG
    if isinstance(axis, tuple):
        kind, eta = axis
        if kind != "slope":
            raise DomainError(f"unknown axis {axis!r}")
        fn = lambda t, s, e=float(eta): s[1] - e * s[0]
        name = f"y={eta}*w"
    else:
        try:
            fn = _AXES[axis]
        except KeyError:
            raise DomainError(f"unknown axis {axis!r}") from None
        name = axis
    s0 = np.atleast_1d(np.asarray(start, dtype=float))
    g0 = fn(0.0, s0)
    scale = 1.0 + float(np.max(np.abs(s0)))
    if abs(g0) <= cfg.event_tol * scale:
        return 0.0, s0
    traj = integrate(rhs, s0, (0.0, tau_max),
                     events=[EventSpec(name, fn, terminal=True)], cfg=cfg)
    ev = traj.first_event(name)
    if ev is None:
        raise NoCrossingError(f"no {name} crossing within tau <= {tau_max}")
    return ev.tau, ev.state
