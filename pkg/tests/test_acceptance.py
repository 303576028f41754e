"""Acceptance sweep: every headline property at its contracted tolerance.

Each criterion runs the corresponding randomized suite at its full sample
count and prints one PASS/FAIL line (written past pytest's capture so the
lines always appear on the terminal).
"""

import numpy as np

from confvac.suites import SuiteConfig, run_suite


def _report_line(capsys, index, name, report, detail=""):
    status = "PASS" if report.passed else "FAIL"
    line = (f"ACCEPTANCE {index:2d} {name}: {status} "
            f"({report.wall_time_s:.2f}s{'; ' + detail if detail else ''})")
    with capsys.disabled():
        print(line, flush=True)


def _check(report, name):
    return next(c for c in report.checks if c.name == name)


def test_criterion_01_interval_law(capsys):
    report = run_suite(SuiteConfig(suite="interval-law", samples=10_000))
    c = _check(report, "interval-law-residual")
    _report_line(capsys, 1, "interval-law", report,
                 f"max residual {c.statistic:.2e} < 1e-9")
    assert c.tolerance == 1e-9
    assert c.statistic < 1e-9
    assert report.wall_time_s < 5.0
    assert report.passed


def test_criterion_02_ricci_flatness(capsys):
    report = run_suite(SuiteConfig(suite="ricci-flat", samples=50))
    c = _check(report, "ricci-max-component")
    _report_line(capsys, 2, "ricci-flat", report,
                 f"max |R| {c.statistic:.2e} < 1e-7 under finite differences")
    assert c.tolerance == 1e-7
    assert c.statistic < 1e-7
    assert report.wall_time_s < 10.0
    assert report.passed


def test_criterion_03_abraham_invariance(capsys):
    report = run_suite(SuiteConfig(suite="abraham", samples=20, step=1e-3))
    sup = _check(report, "image-abraham-sup")
    hill = _check(report, "hill-general-vs-reduced")
    _report_line(capsys, 3, "abraham", report,
                 f"sup|w| {sup.statistic:.2e} < 1e-5, "
                 f"law gap {hill.statistic:.2e} < 1e-8")
    assert sup.tolerance == 1e-5 and sup.statistic < 1e-5
    assert hill.tolerance == 1e-8 and hill.statistic < 1e-8
    assert report.wall_time_s < 30.0
    assert report.passed


def test_criterion_04_light_rays(capsys):
    report = run_suite(SuiteConfig(suite="light-rays"))
    col = _check(report, "image-collinearity")
    sign = _check(report, "sign-law-on-crossing-rays")
    _report_line(capsys, 4, "light-rays", report,
                 f"collinearity {col.statistic:.2e} < 1e-9, "
                 f"{sign.extra['rays_with_one_crossing']} crossing rays verified")
    assert col.tolerance == 1e-9 and col.statistic < 1e-9
    assert sign.statistic == 0.0
    assert sign.extra["rays_with_one_crossing"] >= 5
    assert report.wall_time_s < 5.0
    assert report.passed


def test_criterion_05_scalar_invariance(capsys):
    report = run_suite(SuiteConfig(suite="scalar-invariance", samples=1000))
    c = _check(report, "scalar-invariance-residual")
    _report_line(capsys, 5, "scalar-invariance", report,
                 f"extrapolated residual {c.statistic:.2e} < 1e-8")
    assert c.tolerance == 1e-8
    assert c.statistic < 1e-8
    assert report.wall_time_s < 10.0
    assert report.passed


def test_criterion_06_tetrad_contraction(capsys):
    report = run_suite(SuiteConfig(suite="tetrad-identity", samples=1000))
    c = _check(report, "tetrad-contraction-residual")
    _report_line(capsys, 6, "tetrad-identity", report,
                 f"residual {c.statistic:.2e} < 1e-10")
    assert c.tolerance == 1e-10
    assert c.statistic < 1e-10
    assert report.wall_time_s < 5.0
    assert report.passed


def test_criterion_07_em_field_tensor_invariance(capsys):
    report = run_suite(SuiteConfig(suite="em-invariance", samples=100,
                                   epsilon=1e-2, h=1e-4))
    field = _check(report, "field-tensor-invariance")
    halved = _check(report, "residual-decreases-at-half-h")
    ablate = _check(report, "ablation-run-fails-threshold")
    _report_line(capsys, 7, "em-invariance", report,
                 f"residual {field.statistic:.2e} < 1e-4, "
                 f"half-h {halved.statistic:.2e}, "
                 f"ablated transport residual {ablate.statistic:.2e} > 1e-4")
    assert field.tolerance == 1e-4 and field.statistic < 1e-4
    # residual does not grow when the step is halved (it saturates at the
    # regulator-extrapolation floor once the h^2 truncation is resolved)
    assert halved.passed
    # dropping the phi phi' term while keeping the two linear correction
    # terms drives the ablated run's reported residual past the same 1e-4
    assert ablate.comparator == ">" and ablate.statistic > 1e-4
    assert report.wall_time_s < 60.0
    assert report.passed


def test_criterion_08_fluctuation_dissipation(capsys):
    report = run_suite(SuiteConfig(suite="fdr"))
    dev = _check(report, "vacuum-limit-deviation")
    zero = _check(report, "zero-fluctuations-negative-frequency")
    _report_line(capsys, 8, "fdr", report,
                 f"T->0 deviation {dev.statistic:.1e}, exact zero at omega<0")
    assert _check(report, "monotone-in-temperature").statistic == 0.0
    assert zero.statistic == 0.0
    assert report.passed


def test_criterion_09_momentum_space_oracle(capsys):
    report = run_suite(SuiteConfig(suite="momentum-oracle", samples=20))
    c = _check(report, "proportionality-deviation")
    fitted = complex(*c.extra["fitted_constant"])
    _report_line(capsys, 9, "momentum-oracle", report,
                 f"ratio spread {c.statistic:.2e} < 1e-2, "
                 f"fitted constant {fitted.real:+.4f}{fitted.imag:+.4f}j")
    assert c.tolerance == 1e-2
    assert c.statistic < 1e-2
    # reported, not asserted: the constant should land near -1/(2 pi^2)
    assert abs(fitted.real - (-1.0 / (2 * np.pi**2))) < 5e-3
    assert report.wall_time_s < 60.0
    assert report.passed


def test_criterion_10_mirror_verdicts(capsys):
    report = run_suite(SuiteConfig(suite="mirror-2d"))
    labels = _check(report, "verdict-labels")
    sep = _check(report, "evidence-separation")
    _report_line(capsys, 10, "mirror-2d", report,
                 f"verdicts {labels.extra}, separation {sep.statistic:.1e} > 1e3")
    assert labels.statistic == 0.0
    assert labels.extra["inertial"]["verdict"] == "invariant"
    assert labels.extra["uniformly-accelerated"]["verdict"] == "invariant"
    assert labels.extra["sinusoidal"]["verdict"] == "modified"
    assert sep.statistic > 1e3
    assert report.wall_time_s < 5.0
    assert report.passed
