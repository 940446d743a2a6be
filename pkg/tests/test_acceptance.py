"""Acceptance criteria, each run at its stated tolerance.

Every test records one ``criterion N: PASS|FAIL`` line; conftest prints them
in the terminal summary. Run this file directly for the lines alone.
"""

import re
import subprocess
import sys
import time

import numpy as np
import pytest

from tpsqubits.entanglement import classify_all, reduced_purity_batch, schmidt, schmidt_coefficients_batch
from tpsqubits.linalg import SIGMA_1, SIGMA_3
from tpsqubits.sim import ExperimentConfig, duality_gap, sample_counts
from tpsqubits.states import builtin_state, random_state, singlet
from tpsqubits.tps import ALL_LABELS, Side, TpsLabel, mixed_product_defect
from tpsqubits.verify import EXACT_TOL, SAMPLED_TOL, check_rng, check_uniqueness_theorem, run_all

R = 1 / np.sqrt(2)

# singular values of the singlet's coefficient matrix per label, from an
# independent numpy.linalg.svd of the relabelled amplitudes
SINGLET_ORACLE = {
    "123": (R, R),
    "132": (1.0, 0.0),
    "213": (R, R),
    "231": (1.0, 0.0),
    "312": (1.0, 0.0),
    "321": (1.0, 0.0),
}

LINES = {}


def record(n, ok, detail):
    LINES[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(LINES[n])
    assert ok, LINES[n]


def test_criterion_1_identity_suite():
    report = run_all(0)
    bad = [
        (r.check_id, r.max_deviation, r.tolerance)
        for r in report.results
        if not r.passed or r.tolerance not in (EXACT_TOL, SAMPLED_TOL) or not r.max_deviation < r.tolerance
    ]
    worst = max(report.results, key=lambda r: r.max_deviation / r.tolerance)
    record(
        1,
        report.all_passed and not bad,
        f"seed=0 {report.n_passed}/{len(report.results)} checks, worst {worst.check_id} "
        f"max_dev={worst.max_deviation:.2e} tol={worst.tolerance:.0e} failures={bad}",
    )


def test_criterion_2_uniqueness():
    t0 = time.perf_counter()
    res = check_uniqueness_theorem(check_rng(0, "uniqueness-theorem"), n_samples=100, n_states=100, n_rotations=50)
    elapsed = time.perf_counter() - t0
    record(
        2,
        res.passed and res.max_deviation < 1e-10 and elapsed < 5.0,
        f"seed=0 singlet max phase-distance {res.max_deviation:.2e}; {res.details.split(';')[1].strip()}; "
        f"runtime {elapsed:.2f}s",
    )


def test_criterion_3_relative_entanglement():
    psi = singlet()
    table = classify_all(psi)
    errs = {}
    ranks = {}
    for code, want in SINGLET_ORACLE.items():
        errs[code] = float(np.max(np.abs(np.array(table[code].coefficients) - want)))
        ranks[code] = schmidt(psi, code).rank
    expected_ranks = {"123": 2, "213": 2, "321": 1, "231": 1, "312": 1, "132": 1}
    ok = ranks == expected_ranks and max(errs.values()) < 1e-10
    record(3, ok, f"ranks={ranks} max coefficient error {max(errs.values()):.2e}")


def test_criterion_4_purity_oracle():
    seed = 4
    rng = np.random.default_rng(seed)
    states = np.stack([random_state(rng) for _ in range(1000)])
    worst_sum = worst_lr = 0.0
    for l in ALL_LABELS:
        s = schmidt_coefficients_batch(states, l)
        left = reduced_purity_batch(states, l, Side.LEFT)
        right = reduced_purity_batch(states, l, Side.RIGHT)
        worst_sum = max(worst_sum, float(np.max(np.abs(left - np.sum(s**4, axis=1)))))
        worst_lr = max(worst_lr, float(np.max(np.abs(left - right))))
    record(
        4,
        worst_sum < 1e-10 and worst_lr < 1e-12,
        f"seed={seed} 1000 states x 6 labels: |purity - sum s^4| <= {worst_sum:.2e}, |Left - Right| <= {worst_lr:.2e}",
    )


def test_criterion_5_sampler():
    seed = 5
    shots = 10**6
    c = sample_counts(ExperimentConfig(singlet(), TpsLabel.T123, shots, seed))
    n00, n01, _, n11 = c.joint
    dev = abs(n01 / shots - 0.5)
    gaps = {}
    for name in ("singlet", "phi+", "uniform"):
        diff, se = duality_gap(builtin_state(name), 10**5, seed)
        gaps[name] = abs(diff) / se if se > 0 else (0.0 if diff == 0 else np.inf)
    ok = n00 == 0 and n11 == 0 and dev < 0.005 and all(z <= 6 for z in gaps.values())
    zs = ", ".join(f"{k} {v:.2f}" for k, v in gaps.items())
    record(5, ok, f"seed={seed} n00={n00} n11={n11} |n01/N - 1/2|={dev:.2e}; duality gap in SE units: {zs}")


def test_criterion_6_mixed_product_counterexample():
    seed = 6
    rng = np.random.default_rng(seed)
    defect = mixed_product_defect(TpsLabel.T123, TpsLabel.T321, SIGMA_1, SIGMA_3, SIGMA_1, SIGMA_3)
    same = 0.0
    for _ in range(100):
        a, b, c, d = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)) for _ in range(4))
        for l in ALL_LABELS:
            same = max(same, mixed_product_defect(l, l, a, b, c, d))
    record(
        6,
        defect > 0.01 and same < 1e-12,
        f"seed={seed} defect(123,321,s1,s3,s1,s3)={defect:.3e} (needs > 0.01); max same-label defect {same:.2e}",
    )


def _report_without_timestamp(seed):
    out = subprocess.run(
        [sys.executable, "-m", "tpsqubits", "verify", "--seed", str(seed)],
        check=True,
        capture_output=True,
    ).stdout
    return re.sub(rb'\n\s*"timestamp": "[^"]*",', b"", out)


def test_criterion_7_determinism():
    a = _report_without_timestamp(0)
    b = _report_without_timestamp(0)
    record(7, a == b and b"timestamp" not in a, f"seed=0 two verify runs, {len(a)} bytes each, identical={a == b}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
