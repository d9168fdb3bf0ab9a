import math

import numpy as np
import pytest

from seplane.errors import DomainError
from seplane.params import (
    ProblemParams,
    ReducedParams,
    critical_potential,
    mode_bounds,
)
from seplane.solutions import (
    AngularProfile,
    build_solution_set,
    p1_explicit,
    reduced_residual_report,
    sector_exists,
    verify_profile,
)

from conftest import rel_err


def make_profile(omega, k=1, kind="positive"):
    n = len(omega)
    return AngularProfile(np.linspace(0.0, 2.0 * math.pi, n, endpoint=False),
                          np.asarray(omega, dtype=float), k, kind)


class TestVerifyProfile:
    def test_constant_profile_exact(self):
        params = ProblemParams(2.0, 3.0, 9.0)
        value = (9.0 - critical_potential(2.0, 3.0)) ** 0.5
        rep = verify_profile(make_profile(np.full(2048, value), kind="constant"),
                             params)
        assert rep.passed
        assert rep.max_residual < 1e-12

    def test_sine_identity_reduced_chart(self, p1_power):
        # w = 2 sin(tau) solves the p = 1 reduced equation with b = 1, d = 0:
        # the three terms cancel identically
        rp = ReducedParams(1.0, 1.5, 1.0, 0.0)
        tau = np.linspace(0.0, 2.0 * math.pi, 8192, endpoint=False)
        w = 2.0 * np.sin(tau)
        rep = reduced_residual_report(tau, w, rp, p1_power, tol=1e-12,
                                      w_prime=2.0 * np.cos(tau),
                                      w_second=-2.0 * np.sin(tau))
        assert rep.passed and rep.max_residual < 1e-12
        rep_fd = reduced_residual_report(tau, w, rp, p1_power, tol=1e-8)
        assert rep_fd.passed

    def test_explicit_p1_lift_residual(self):
        params = ProblemParams(1.0, 2.0, 0.0)
        prof = p1_explicit(0.5, 2.0, n=4096)
        rep = verify_profile(prof, params, tol=1e-6)
        assert rep.passed

    def test_grid_too_coarse(self):
        params = ProblemParams(2.0, 3.0, 9.0)
        with pytest.raises(DomainError):
            verify_profile(make_profile(np.ones(512)), params)

    def test_detects_wrong_profile(self):
        params = ProblemParams(2.0, 3.0, 9.0)
        rep = verify_profile(make_profile(2.0 + np.cos(
            np.linspace(0.0, 2.0 * math.pi, 2048, endpoint=False))), params)
        assert not rep.passed


class TestExplicitFamilies:
    def test_small_turning_parameter_limit(self):
        prof = p1_explicit(1e-6, 2.0, n=2048)
        assert np.max(np.abs(prof.omega - 1.0)) < 2e-6

    def test_pointwise_value(self):
        prof = p1_explicit(0.5, 2.0, n=2048)
        assert prof.omega[0] == pytest.approx(math.sqrt(0.5))

    def test_reduced_intercepts(self):
        # the underlying reduced profile meets the axis at 1 -+ K
        for K in (0.25, 0.6):
            prof = p1_explicit(K, 1.0, n=2048)
            w = prof.omega  # q = 1 lift is the identity
            assert w[0] == pytest.approx(1.0 - K)
            assert w[len(w) // 2] == pytest.approx(1.0 + K, rel=1e-9)

    def test_sign_changing_profile(self):
        prof = p1_explicit("omega0", 0.5, n=2048)
        sig = prof.sigma
        assert np.allclose(prof.omega, 4.0 * np.abs(np.sin(sig)) * np.sin(sig))
        with pytest.raises(DomainError):
            p1_explicit("omega0", 2.0)

    def test_positive_limit_profile(self):
        prof = p1_explicit("omega0plus", 0.5, n=2048)
        assert np.allclose(prof.omega, (2.0 * np.abs(np.sin(prof.sigma))) ** 2)
        with pytest.raises(DomainError):
            p1_explicit("omega0plus", 1.5)

    def test_two_parameter_family_shares_period(self):
        params = ProblemParams(1.0, 2.0, 0.0)
        for K in np.arange(0.1, 0.95, 0.1):
            prof = p1_explicit(round(float(K), 1), 2.0, n=4096)
            rep = verify_profile(prof, params, tol=1e-6)
            assert rep.passed
            half = len(prof.omega) // 2
            shifted = np.roll(prof.omega, -half)
            assert np.max(np.abs(shifted - prof.omega)) > 0.05


class TestBuildSolutionSet:
    def test_cubic_zero_potential(self):
        ss = build_solution_set(ProblemParams(2.0, 3.0, 0.0), k_max=2)
        assert ss.constants == [] and ss.positive == []
        assert [e.k for e in ss.sign_changing] == [2]
        entry = ss.sign_changing[0]
        assert entry.residual.passed
        assert rel_err(entry.period_measured, math.pi) < 1e-8
        om = entry.profile.omega
        nz = om[np.abs(om) > 1e-9 * np.max(np.abs(om))]
        assert int(np.sum(np.sign(nz) != np.sign(np.roll(nz, -1)))) == 4

    def test_positive_threshold_scan(self):
        # the first positive mode appears exactly above c_q + beta^(p-1)/p
        threshold = critical_potential(2.0, 3.0) + 0.5
        assert mode_bounds(ProblemParams(2.0, 3.0, threshold + 1e-4)).positive_modes \
            == (1,)
        assert mode_bounds(ProblemParams(2.0, 3.0, threshold - 1e-4)).positive_modes \
            == ()

    def test_p1_set(self):
        ss = build_solution_set(ProblemParams(1.0, 2.0, 3.0))
        assert ss.constants == [pytest.approx(2.0)]
        assert [e.k for e in ss.positive] == [3]
        entry = ss.positive[0]
        assert entry.residual.passed
        assert entry.profile.omega.min() > 0.0
        assert rel_err(entry.period_measured, 2.0 * math.pi / 3.0) < 1e-6

    def test_constant_only_positive_set_below_threshold(self):
        # p < 2 with a negative critical potential: at c = 0 the positive set
        # is the single constant (-c_q)^(1/(q+1-p)) and modes start at k = 1
        params = ProblemParams(1.5, 2.5, 0.0)
        ss = build_solution_set(params, k_max=1)
        cq = critical_potential(1.5, 2.5)
        assert cq < 0.0
        assert ss.constants == [pytest.approx((-cq) ** 0.5)]
        assert ss.positive == []
        assert [e.k for e in ss.sign_changing] == [1]
        assert ss.sign_changing[0].residual.passed

    def test_p1_zero_potential_families(self):
        ss = build_solution_set(ProblemParams(1.0, 0.5, 0.0))
        names = [f["family"] for f in ss.explicit_families]
        assert "omega0" in names and "omega0plus" in names
        assert sum(1 for n in names if n == "omega_K_plus") == 3
        assert ss.constants == [pytest.approx(1.0)]

    def test_subquadratic_diffusion_with_potential(self):
        # p < 2 with d != 0: sign-changing orbits cross the line w = 0 where
        # the field is only Hoelder; profiles must still verify
        ss = build_solution_set(ProblemParams(1.7, 2.2, -1.0))
        assert [e.k for e in ss.sign_changing] == [2, 3, 4]
        for e in ss.sign_changing:
            assert e.residual.passed
        assert not [n for n in ss.notes if "failed" in n]

    def test_subquadratic_center_regime(self):
        ss = build_solution_set(ProblemParams(1.5, 2.5, 1.0), k_max=1)
        assert [e.k for e in ss.sign_changing] == [1]
        assert [e.k for e in ss.positive] == [1]
        assert all(e.residual.passed for e in ss.sign_changing + ss.positive)

    def test_describe_is_json_ready(self):
        import json

        ss = build_solution_set(ProblemParams(1.0, 2.0, 3.0))
        text = json.dumps(ss.describe(), sort_keys=True)
        assert "positive" in text


class TestSector:
    def test_boundary_case(self):
        rep = sector_exists(2.0, 3.0, math.pi)
        assert rep.beta_s == pytest.approx(1.0, abs=1e-12)
        assert rep.beta_q == 1.0
        assert not rep.exists  # strict inequality required

    def test_exists_case(self):
        rep = sector_exists(2.0, 5.0, math.pi)
        assert rep.beta_q == 0.5 and rep.exists

    def test_unconditional_shortcut(self):
        for theta in (0.5, 2.0, 5.0):
            rep = sector_exists(1.5, 3.0, theta)
            assert rep.exists and rep.unconditional

    def test_wide_opening(self):
        rep = sector_exists(2.0, 5.2, 2.0 * math.pi * (1.0 - 1e-12))
        assert rep.beta_s == pytest.approx(0.5, abs=1e-9)
        assert rep.exists  # 2/(q-1) < 1/2 for q > 5
        assert not sector_exists(2.0, 4.9, 2.0 * math.pi * (1.0 - 1e-12)).exists

    def test_monotone_in_opening(self):
        values = [sector_exists(2.7, 4.0, th).beta_s
                  for th in np.linspace(0.2, 6.0, 30)]
        assert all(b1 > b2 for b1, b2 in zip(values, values[1:]))

    def test_domain(self):
        with pytest.raises(DomainError):
            sector_exists(2.0, 3.0, 0.0)
        with pytest.raises(DomainError):
            sector_exists(1.0, 2.0, 1.0)
