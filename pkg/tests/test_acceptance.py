"""End-to-end acceptance checks, one per shipped numerical claim.

Each test prints a single [PASS]/[FAIL] line with the measured numbers and
wall time, bypassing capture so the verdicts are visible in any pytest run.
Tolerances are pinned here and nowhere weakened: exact comparisons stay
exact, statistical ones state their sigma windows.
"""

import math
import time
from pathlib import Path

import numpy as np

from ghostfield.bell import (
    bell_sum,
    enumerate_strategies,
    lhv_bruteforce_max,
    lhv_sigma_min,
    make_model,
    reduced_trine_expression,
    trine_config,
)
from ghostfield.cli import main
from ghostfield.geometry import Direction3, random_direction
from ghostfield.local_field import (
    build_quadrature,
    malus_correlation_closed,
    malus_correlation_quadrature,
    marginal_density,
    naive_field,
    quasi_field,
    signed_mc_correlation,
)
from ghostfield.nonlocal_field import (
    COUNTEREXAMPLE_5_12,
    conditional_from_state,
    correlation_from_matrix,
    empirical_correlation,
    generate_sequences,
    singlet_conditional,
)
from ghostfield.quantum import joint_expectation, make_singlet

FOUR_PI = 4.0 * math.pi
README = Path(__file__).resolve().parents[1] / "README.md"


def verdict(capsys, ok, label, detail, elapsed, budget):
    ok = ok and elapsed < budget
    with capsys.disabled():
        print(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail} [{elapsed:.2f}s / {budget:.0f}s]")
    assert ok, f"{label}: {detail}"


def trine_pair():
    return Direction3.from_polar_angle(0.0), Direction3.from_polar_angle(math.radians(120.0))


def test_criterion_01_singlet_correlation(capsys):
    start = time.perf_counter()
    psi = make_singlet()
    gen = np.random.default_rng(101)
    worst = 0.0
    for _ in range(1000):
        a = random_direction(gen)
        b = random_direction(gen)
        worst = max(worst, abs(joint_expectation(psi, a, b) + a.dot(b)))
    verdict(
        capsys, worst < 1e-12,
        "criterion 01 singlet correlation",
        f"max |E(a,b) + a.b| = {worst:.2e} over 1000 pairs (tol 1e-12)",
        time.perf_counter() - start, 1.0,
    )


def test_criterion_02_quantum_bell_violation(capsys):
    start = time.perf_counter()
    model = make_model("quantum")
    report = bell_sum(model, trine_config())
    reduced = reduced_trine_expression(model)
    ok = abs(report.s - 1.5) < 1e-12 and report.violated and abs(reduced - report.s) < 1e-12
    verdict(
        capsys, ok,
        "criterion 02 quantum Bell violation",
        f"trine s = {report.s!r}, reduced form = {reduced!r} (target 1.5, tol 1e-12)",
        time.perf_counter() - start, 1.0,
    )


def test_criterion_03_naive_field_shortfall(capsys):
    start = time.perf_counter()
    field = naive_field()
    gen = np.random.default_rng(103)
    worst = max(
        abs(malus_correlation_closed(field, a, b) + a.dot(b) / 3.0)
        for a, b in ((random_direction(gen), random_direction(gen)) for _ in range(1000))
    )
    report = bell_sum(make_model("naive-local"), trine_config())
    ok = worst < 1e-12 and abs(report.s - 0.5) < 1e-12 and not report.violated
    verdict(
        capsys, ok,
        "criterion 03 naive field",
        f"max |E + a.b/3| = {worst:.2e}, trine s = {report.s!r} (obeys bound)",
        time.perf_counter() - start, 1.0,
    )


def test_criterion_04_quasi_field_exactness(capsys):
    start = time.perf_counter()
    field = quasi_field()
    gen = np.random.default_rng(104)
    quad = build_quadrature(32, 64)
    worst_closed = 0.0
    worst_quad = 0.0
    for _ in range(100):
        a = random_direction(gen)
        b = random_direction(gen)
        closed = malus_correlation_closed(field, a, b)
        worst_closed = max(worst_closed, abs(closed + a.dot(b)))
        worst_quad = max(
            worst_quad, abs(malus_correlation_quadrature(field, a, b, quad) - closed)
        )
    marginal_err = abs(marginal_density(field) - 1.0 / FOUR_PI)
    mass_err = abs(field.total_signed_mass - 1.0)
    ok = (
        worst_closed < 1e-12
        and worst_quad < 1e-10
        and marginal_err < 1e-12
        and mass_err < 1e-12
    )
    verdict(
        capsys, ok,
        "criterion 04 quasi field exactness",
        f"closed err {worst_closed:.2e} (tol 1e-12), quad 32x64 err {worst_quad:.2e} "
        f"(tol 1e-10), marginal err {marginal_err:.2e}, mass err {mass_err:.2e}",
        time.perf_counter() - start, 5.0,
    )


def test_criterion_05_negativity_witness(capsys):
    start = time.perf_counter()
    field = quasi_field()
    expected = -2.0 / FOUR_PI**2
    gen = np.random.default_rng(105)
    checked = 0
    ok = True
    while checked < 100:
        n_a = random_direction(gen)
        n_b = random_direction(gen)
        if n_a.dot(n_b) < -0.999999:
            continue
        value = field.density(n_a, n_b)
        ok = ok and value == expected and value < 0.0
        checked += 1
    verdict(
        capsys, ok,
        "criterion 05 negativity witness",
        f"density = {expected!r} exactly and < 0 at {checked} off-atom pairs",
        time.perf_counter() - start, 1.0,
    )


def test_criterion_06_conditional_matrices(capsys):
    start = time.perf_counter()
    psi = make_singlet()
    gen = np.random.default_rng(106)
    worst = 0.0
    for _ in range(100):
        a = random_direction(gen)
        b = random_direction(gen)
        diff = np.abs(
            conditional_from_state(psi, a, b).q - singlet_conditional(a.angle_to(b)).q
        )
        worst = max(worst, float(diff.max()))
    trine = singlet_conditional(math.radians(120.0)).q
    # the exact rationals (3/4, 1/4), reached to 1 ulp of double rounding
    trine_err = float(
        np.abs(trine - np.array([[0.75, 0.25], [0.25, 0.75]])).max()
    )
    ok = worst < 1e-12 and trine_err <= 1e-15
    verdict(
        capsys, ok,
        "criterion 06 conditional matrices",
        f"state-vs-closed err {worst:.2e} over 100 pairs (tol 1e-12), "
        f"120deg entries off (3/4, 1/4) by {trine_err:.1e} (<= 1 ulp)",
        time.perf_counter() - start, 1.0,
    )


def test_criterion_07_sequence_statistics(capsys):
    start = time.perf_counter()
    n = 10**6
    seqs = generate_sequences(singlet_conditional(math.radians(120.0)), n, seed=7)
    freq = seqs.same_outcome_frequency()
    est = empirical_correlation(seqs)
    anti = generate_sequences(singlet_conditional(0.0), n, seed=7)
    exact_anti = bool(np.array_equal(anti.lambda_a, -anti.lambda_b))
    ok = (
        abs(freq - 0.75) < 0.002
        and abs(est.mean - 0.5) < 4.0 * est.stderr
        and exact_anti
    )
    verdict(
        capsys, ok,
        "criterion 07 sequence statistics",
        f"same-outcome {freq:.4f} (0.75 +- 0.002), corr {est.mean:.4f} "
        f"(0.5 +- 4 x {est.stderr:.1e}), exact anticorrelation at 0deg: {exact_anti}",
        time.perf_counter() - start, 10.0,
    )


def test_criterion_08_signed_monte_carlo(capsys):
    start = time.perf_counter()
    field = quasi_field()
    a, b = trine_pair()
    expected = malus_correlation_closed(field, a, b)
    within_4 = 0
    within_3 = 0
    for seed in range(20):
        est = signed_mc_correlation(field, a, b, 10**6, seed=seed)
        gap = abs(est.mean - expected)
        within_4 += gap < 4.0 * est.stderr
        within_3 += gap < 3.0 * est.stderr
    ok = within_4 == 20 and within_3 >= 19
    verdict(
        capsys, ok,
        "criterion 08 signed Monte Carlo",
        f"{within_4}/20 seeds inside 4 sigma (need 20), "
        f"{within_3}/20 inside 3 sigma (need >= 19) at n=1e6",
        time.perf_counter() - start, 30.0,
    )


def test_criterion_09_lhv_oracle(capsys):
    start = time.perf_counter()
    max_s = lhv_bruteforce_max()
    min_sigma = lhv_sigma_min()
    sums = np.array([s.bell_sum() for s in enumerate_strategies()])
    gen = np.random.default_rng(109)
    mixture_max = max(
        float(gen.dirichlet(np.ones(sums.size)) @ sums) for _ in range(1000)
    )
    ok = max_s == 1.0 and min_sigma == 1.0 and mixture_max <= 1.0 + 1e-12
    verdict(
        capsys, ok,
        "criterion 09 LHV oracle",
        f"max S = {max_s}, min product quantity = {min_sigma}, "
        f"1000-mixture max = {mixture_max:.12f} <= 1 + 1e-12",
        time.perf_counter() - start, 1.0,
    )


def test_criterion_10_counterexample_model(capsys):
    start = time.perf_counter()
    e = correlation_from_matrix(COUNTEREXAMPLE_5_12)
    report = bell_sum(make_model("counterexample-5-12"), trine_config())
    readme = README.read_text(encoding="utf-8")
    documented = "-1/6" in readme and "+1/6" in readme
    ok = e == -1.0 / 6.0 and report.s == -0.5 and not report.violated and documented
    verdict(
        capsys, ok,
        "criterion 10 counterexample model",
        f"E = {e!r} (= -1/6 exactly), trine s = {report.s!r}, "
        f"sign discrepancy documented in README: {documented}",
        time.perf_counter() - start, 1.0,
    )


def test_criterion_11_reproducibility(capsys):
    start = time.perf_counter()

    def run(argv):
        code = main(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    local_argv = ["local", "--alpha", "120", "--samples", "1000000",
                  "--seed", "12", "--workers", "4", "--format", "csv"]
    seq_argv = ["sequences", "--alpha", "120", "--samples", "20000",
                "--seed", "12", "--workers", "4"]
    ok = run(local_argv) == run(local_argv) and run(seq_argv) == run(seq_argv)
    verdict(
        capsys, ok,
        "criterion 11 reproducibility",
        "MC commands repeated with identical seed/worker settings "
        f"produce byte-identical output: {ok}",
        time.perf_counter() - start, 10.0,
    )
