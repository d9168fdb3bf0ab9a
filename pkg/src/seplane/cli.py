"""Command-line front end: every computation as a subcommand emitting
JSON or CSV suitable for tables and plots.

Exit codes: 0 success, 2 invalid input, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import checks as _checks
from .errors import DomainError, SeplaneError
from .fields import cartesian_rhs, field_cartesian, p1_cartesian_rhs
from .integrate import EventSpec, IntegratorConfig, integrate
from .orbits import (
    classify_orbit,
    first_integral,
    first_integral_p1,
    saddle_data,
    shoot_homoclinic,
)
from .params import (
    ProblemParams,
    angular_eigenvalue,
    critical_potential,
    decay_exponent,
    mode_bounds,
    mode_threshold,
    reduce_params,
    reduced_nonlinearity,
    slope_potential_min,
    stationary_abscissa,
)
from .periods import period_positive, period_positive_p1
from .schemas import SCHEMA_VERSION
from .solutions import build_solution_set, sector_exists

__all__ = ["main"]


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _add_common(sub: argparse.ArgumentParser, *, needs_pq: bool = True) -> None:
    if needs_pq:
        sub.add_argument("-p", type=float, required=True, help="diffusion exponent, p >= 1")
        sub.add_argument("-q", type=float, required=True, help="source exponent, q > p - 1")
        sub.add_argument("-c", type=float, default=0.0, help="potential coefficient")
    sub.add_argument("--tol-rel", type=float, default=None)
    sub.add_argument("--tol-abs", type=float, default=None)
    sub.add_argument("--format", choices=("json", "csv"), default=None)
    sub.add_argument("--out", default=None, help="output path (directory for solve-set)")
    sub.add_argument("--seed", type=int, default=12345,
                     help="seed for the randomized acceptance suites")
    sub.add_argument("--paper-check", action="store_true",
                     help="run the acceptance assertions relevant to this subcommand")
    sub.add_argument("--config", default=None,
                     help="key=value file overriding integrator settings")


def _integrator_config(args) -> IntegratorConfig:
    fields = {}
    if args.config:
        for line in Path(args.config).read_text().splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in ("rel_tol", "abs_tol", "max_step", "max_steps", "event_tol"):
                raise DomainError(f"unknown config key {key!r}")
            fields[key] = int(value) if key == "max_steps" else float(value)
    if args.tol_rel is not None:
        fields["rel_tol"] = args.tol_rel
    if args.tol_abs is not None:
        fields["abs_tol"] = args.tol_abs
    return IntegratorConfig(**fields)


def _problem(args) -> ProblemParams:
    return ProblemParams(args.p, args.q, args.c)


def cmd_params(args) -> int:
    params = _problem(args)
    p, q, c = params.p, params.q, params.c
    rp = reduce_params(params)
    nl = reduced_nonlinearity(params)
    cq = critical_potential(p, q)
    out = {
        "schema_version": SCHEMA_VERSION,
        "p": p, "q": q, "c": c,
        "beta_q": decay_exponent(p, q),
        "lambda_q": angular_eigenvalue(p, q),
        "c_q": cq,
        "b": rp.b, "d": rp.d,
        "a": stationary_abscissa(rp, nl) if rp.b + rp.d > 0.0 else None,
        "m_d": None,
        "M_q": None,
        "regime": {
            "b_plus_d_positive": rp.b + rp.d > 0.0,
            "slope_potential_increasing": True,
            "degenerate_critical": False,
        },
        "mode_bounds": {},
    }
    if p > 1.0:
        mn = slope_potential_min(p, rp.b)
        out["regime"]["slope_potential_increasing"] = mn is None
        out["regime"]["degenerate_critical"] = (
            mn is not None and abs(rp.d - mn[1]) < 1e-10)
        if c <= cq:
            out["M_q"] = mode_threshold(params)
        try:
            out["m_d"] = saddle_data(rp, nl)["m"]
        except SeplaneError:
            pass
    mb = mode_bounds(params)
    out["mode_bounds"] = {
        "k_q": mb.k_sign_changing_min,
        "positive_modes": list(mb.positive_modes),
        "positive_nonconstant_exists": mb.positive_nonconstant_exists,
    }
    _emit(_json_dump(out), args.out)
    return 0


def _orbit_rows(traj, n: int = 800):
    taus = np.linspace(traj.taus[0], traj.taus[-1], n)
    if traj.dense is not None and len(traj.taus) > 1:
        states = traj.sample(taus)
    else:
        taus, states = traj.taus, traj.states
    return taus, states


def _p1_circle_meta(w0, y0, rp, nl, meta) -> bool:
    """Only the circle of radius b+1 crosses the singular line w = 0 at
    p = 1, d = 0 (it is the zero level of the first integral); starts on it
    are continued in closed form."""
    if nl.power != 1.0 or rp.b <= -1.0:
        return False
    radius = rp.b + 1.0
    on_circle = rp.d == 0.0 and abs(math.hypot(w0, y0) - radius) <= 1e-9 * radius
    if w0 == 0.0 and not on_circle:
        raise DomainError(
            "no p = 1 trajectory crosses w = 0 off the circle of radius b + 1")
    if on_circle:
        meta["orbit_class"] = "closed-around-origin"
        meta["analytic"] = "unique sign-changing orbit, continued in closed form"
    return on_circle


def _p1_circle_samples(w0, y0, rp, span, meta, n: int = 800):
    radius = rp.b + 1.0
    phase = math.atan2(w0, y0)
    taus = np.linspace(0.0, span, n)
    w = radius * np.sin(taus + phase)
    y = radius * np.cos(taus + phase)
    events = []
    for name, offset in (("w=0", 0.0), ("y=0", math.pi / 2.0)):
        k = math.ceil((phase - offset) / math.pi)
        t_ev = k * math.pi + offset - phase
        while t_ev <= span:
            if t_ev > 0.0:
                events.append({"tau": t_ev, "kind": name,
                               "state": [radius * math.sin(t_ev + phase),
                                         radius * math.cos(t_ev + phase)]})
            t_ev += math.pi
    meta["events"] = sorted(events, key=lambda e: e["tau"])
    return taus, np.column_stack([w, y])


def _finish_orbit(args, taus, states, rp, nl, meta) -> None:
    meta["n_samples"] = len(taus)
    drift_vals = []
    for w, u_y in states:
        if w > 1e-9:
            xi = u_y / w
            drift_vals.append(first_integral_p1(
                (w, xi / math.sqrt(1.0 + xi * xi)), rp, nl))
    if drift_vals:
        meta["first_integral_drift"] = float(max(drift_vals) - min(drift_vals))
    _write_orbit(args, taus, states, meta)


def cmd_orbit(args) -> int:
    params = _problem(args)
    cfg = _integrator_config(args)
    rp = reduce_params(params)
    nl = reduced_nonlinearity(params)
    meta = {
        "schema_version": SCHEMA_VERSION,
        "p": rp.p, "q": rp.q, "b": rp.b, "d": rp.d,
        "orbit_class": None, "first_integral_drift": None,
        "homoclinic": None, "events": [],
    }
    if args.homoclinic:
        orb = shoot_homoclinic(rp, nl, cfg)
        taus, states = orb.trajectory.taus, orb.trajectory.states
        meta["homoclinic"] = {
            "m_d": orb.witness["m"], "m_initial": orb.m_initial,
            "apex_w": orb.apex_w, "offset": orb.witness["offset"],
        }
        meta["orbit_class"] = "homoclinic"
    else:
        if args.start is None:
            raise DomainError("orbit needs --start W Y or --homoclinic")
        w0, y0 = args.start
        if rp.p == 1.0 and _p1_circle_meta(w0, y0, rp, nl, meta):
            taus, states = _p1_circle_samples(w0, y0, rp, args.span, meta)
            _finish_orbit(args, taus, states, rp, nl, meta)
            return 0
        rhs = p1_cartesian_rhs(rp, nl) if rp.p == 1.0 else cartesian_rhs(rp, nl)
        if rp.p > 1.0:
            fv = field_cartesian((w0, y0), rp, nl)
            if math.hypot(fv.d1, fv.d2) < 1e-12:
                meta["orbit_class"] = "closed-around-P0"
                meta["stationary"] = True
                _write_orbit(args, np.array([0.0]), np.array([[w0, y0]]), meta)
                return 0
        traj = integrate(rhs, (w0, y0), (0.0, args.span),
                         events=[EventSpec("w=0", lambda t, s: s[0]),
                                 EventSpec("y=0", lambda t, s: s[1])],
                         cfg=cfg, dense=True)
        taus, states = _orbit_rows(traj)
        meta["events"] = [{"tau": e.tau, "kind": e.kind,
                           "state": [float(x) for x in e.state]}
                          for e in traj.events]
        if rp.p > 1.0 and (w0 > 0.0 or y0 > 0.0):
            try:
                meta["orbit_class"] = classify_orbit((w0, y0), rp, nl, cfg).tag
            except SeplaneError as exc:
                meta["orbit_class"] = None
                meta["classification_note"] = str(exc)
    meta["n_samples"] = len(taus)

    drift_vals = None
    if rp.p > 1.0 and abs(rp.b - 1.0) <= 1e-12:
        drift_vals = [first_integral((w, y), rp, nl) for w, y in states]
    elif rp.p == 2.0:
        drift_vals = [y * y / 2.0 - (rp.b + rp.d) * w * w / 2.0 + nl.F(w)
                      for w, y in states]
    elif rp.p == 1.0:
        drift_vals = []
        for w, y in states:
            if w > 1e-9:
                xi = y / w
                drift_vals.append(first_integral_p1(
                    (w, xi / math.sqrt(1.0 + xi * xi)), rp, nl))
    if drift_vals:
        meta["first_integral_drift"] = float(max(drift_vals) - min(drift_vals))
    _write_orbit(args, taus, states, meta)
    return 0


def _write_orbit(args, taus, states, meta) -> None:
    if (args.format or "csv") == "json":
        doc = dict(meta)
        doc["samples"] = [[float(t), float(w), float(y)]
                          for t, (w, y) in zip(taus, states)]
        _emit(_json_dump(doc), args.out)
        return
    lines = ["tau,w,y"]
    lines += [f"{_fmt(t)},{_fmt(w)},{_fmt(y)}" for t, (w, y) in zip(taus, states)]
    lines += ["# " + line for line in _json_dump(meta).rstrip("\n").split("\n")]
    _emit("\n".join(lines) + "\n", args.out)


def _parse_grid(spec: str) -> np.ndarray:
    parts = spec.split(":")
    if len(parts) not in (3, 4):
        raise DomainError("grid spec is lo:hi:n or lo:hi:n:log")
    lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    if n <= 0 or hi <= lo:
        raise DomainError("grid needs hi > lo and n > 0")
    if len(parts) == 4 and parts[3] == "log":
        if lo <= 0.0:
            raise DomainError("log grid needs lo > 0")
        return np.geomspace(lo, hi, n)
    return np.linspace(lo, hi, n)


def cmd_period_scan(args) -> int:
    params = _problem(args)
    cfg = _integrator_config(args)
    rp = reduce_params(params)
    nl = reduced_nonlinearity(params)
    grid = _parse_grid(args.grid)
    rows, failed = [], False
    samples = []
    for amp in grid:
        try:
            if args.kind == "sign-changing":
                from .periods import period_sign_changing

                s = period_sign_changing(float(amp), rp, nl, cfg,
                                         method="event-timing")
            elif rp.p == 1.0:
                s = period_positive_p1(float(amp), rp, nl, cfg)
            else:
                s = period_positive(float(amp), rp, nl, cfg)
            samples.append(s)
            rows.append((amp, s.period, s.method, s.est_error, ""))
        except SeplaneError as exc:
            failed = True
            rows.append((amp, math.nan, "", math.nan, str(exc).replace(",", ";")))
    periods = [r[1] for r in rows if r[4] == ""]
    verdict = "insufficient data"
    violation = math.nan
    if len(periods) >= 2:
        diffs = np.diff(periods)
        spread = max(periods) - min(periods)
        if spread <= 1e-8 * max(abs(p_) for p_ in periods):
            verdict, violation = "constant", spread
        elif np.all(diffs < 0.0):
            verdict, violation = "decreasing", 0.0
        elif np.all(diffs > 0.0):
            verdict, violation = "increasing", 0.0
        else:
            verdict = "none"
            violation = float(np.max(np.abs(diffs)))
    if (args.format or "csv") == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "kind": args.kind, "verdict": verdict, "max_violation": violation,
            "rows": [{"amplitude": float(a), "period": None if math.isnan(t) else t,
                      "method": m, "est_error": None if math.isnan(e) else e,
                      "error": err}
                     for a, t, m, e, err in rows],
        }
        _emit(_json_dump(doc), args.out)
    else:
        lines = ["amplitude,period,method,est_error,error"]
        for a, t, m, e, err in rows:
            tcol = "" if math.isnan(t) else _fmt(t)
            ecol = "" if math.isnan(e) else _fmt(e)
            lines.append(f"{_fmt(a)},{tcol},{m},{ecol},{err}")
        lines.append(f"# verdict: {verdict} (max violation {violation})")
        _emit("\n".join(lines) + "\n", args.out)
    return 3 if failed else 0


def cmd_solve_set(args) -> int:
    params = _problem(args)
    cfg = None
    if args.tol_rel is not None or args.tol_abs is not None or args.config:
        cfg = _integrator_config(args)
    ss = build_solution_set(params, cfg, k_max=args.k_max)
    doc = ss.describe()
    doc["schema_version"] = SCHEMA_VERSION
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "solution_set.json").write_text(_json_dump(doc))
        entries = [("sc", e) for e in ss.sign_changing] \
            + [("pos", e) for e in ss.positive]
        for tag, entry in entries:
            lines = ["sigma,omega"]
            lines += [f"{_fmt(s)},{_fmt(o)}"
                      for s, o in zip(entry.profile.sigma, entry.profile.omega)]
            (out_dir / f"mode_{tag}_k{entry.k}.csv").write_text("\n".join(lines) + "\n")
        for fam in ss.explicit_families:
            prof = fam["profile"]
            name = fam["family"] + (f"_K{fam['K']}" if "K" in fam else "")
            lines = ["sigma,omega"]
            lines += [f"{_fmt(s)},{_fmt(o)}"
                      for s, o in zip(prof.sigma, prof.omega)]
            (out_dir / f"family_{name}.csv").write_text("\n".join(lines) + "\n")
    else:
        sys.stdout.write(_json_dump(doc))
    bad = [n for n in ss.notes if "failed" in n]
    return 3 if bad else 0


def cmd_sector(args) -> int:
    rep = sector_exists(args.p, args.q, args.theta)
    doc = dataclasses.asdict(rep)
    doc = {"schema_version": SCHEMA_VERSION, "beta_s": doc.pop("beta_s"), **doc}
    _emit(_json_dump(doc), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seplane",
        description="Separable singular profiles of a quasilinear reaction "
                    "equation via phase-plane analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    p_params = sub.add_parser("params", help="derived constants and regime tags")
    _add_common(p_params)
    p_params.set_defaults(fn=cmd_params)

    p_orbit = sub.add_parser("orbit", help="integrate one phase-plane orbit")
    _add_common(p_orbit)
    p_orbit.add_argument("--start", type=float, nargs=2, metavar=("W", "Y"))
    p_orbit.add_argument("--homoclinic", action="store_true",
                         help="construct the separatrix by saddle shooting")
    p_orbit.add_argument("--span", type=float, default=20.0)
    p_orbit.set_defaults(fn=cmd_orbit)

    p_scan = sub.add_parser("period-scan", help="period function over an amplitude grid")
    _add_common(p_scan)
    p_scan.add_argument("--kind", choices=("sign-changing", "positive"),
                        required=True)
    p_scan.add_argument("--grid", required=True, help="lo:hi:n or lo:hi:n:log")
    p_scan.set_defaults(fn=cmd_period_scan)

    p_solve = sub.add_parser("solve-set", help="assemble the full solution sets")
    _add_common(p_solve)
    p_solve.add_argument("--k-max", type=int, default=None)
    p_solve.set_defaults(fn=cmd_solve_set)

    p_sector = sub.add_parser("sector", help="existence on an angular sector")
    _add_common(p_sector)
    p_sector.add_argument("--theta", type=float, required=True,
                          help="sector opening in radians, 0 < theta < 2 pi")
    p_sector.set_defaults(fn=cmd_sector)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.paper_check:
            ids = _checks.CHECKS_BY_COMMAND[args.command]
            ok = _checks.run_checks(ids, seed=args.seed)
            return 0 if ok else 3
        return args.fn(args)
    except DomainError as exc:
        print(f"seplane: invalid input: {exc}", file=sys.stderr)
        return 2
    except SeplaneError as exc:
        print(f"seplane: numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
