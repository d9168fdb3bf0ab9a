"""Acceptance suite: one test per criterion, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete, or reproduce any single criterion from the command line via
`seplane <subcommand> --paper-check`.
"""

from seplane import checks


def _run(cid: str, fn):
    res = fn()
    status = "PASS" if res.passed else "FAIL"
    print(f"[acceptance] criterion {cid} ({res.name}): {status} "
          f"[{res.detail}; {res.seconds:.1f}s]")
    assert res.passed, f"criterion {cid}: {res.detail}"


def test_criterion_01_constant_identities():
    _run("1", checks.check_constant_identities)


def test_criterion_02_mode_threshold():
    _run("2", checks.check_mode_threshold)


def test_criterion_03_zero_amplitude_closed_form():
    _run("3", checks.check_small_amplitude_closed_form)


def test_criterion_04_first_integral_conservation():
    _run("4", checks.check_conservation)


def test_criterion_05_homoclinic():
    _run("5", checks.check_homoclinic)


def test_criterion_06_period_monotonicity():
    _run("6", checks.check_period_monotonicity)


def test_criterion_07_positive_limits():
    _run("7", checks.check_positive_limits)


def test_criterion_08_p1_exactness():
    _run("8", checks.check_p1_exactness)


def test_criterion_09_solution_sets():
    _run("9", checks.check_solution_sets)


def test_criterion_10_sector_predicate():
    _run("10", checks.check_sector)


def test_criterion_11_chart_suite():
    _run("11", checks.check_chart_suite)
