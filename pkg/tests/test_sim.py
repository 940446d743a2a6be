import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tpsqubits.entanglement import Side
from tpsqubits.sim import (
    CountsTable,
    ExperimentConfig,
    analytic_probs,
    correlation_stats,
    duality_gap,
    sample_counts,
)
from tpsqubits.states import Bell, ColorChannel, bell, builtin_state, color_ket, random_state
from tpsqubits.tps import ALL_LABELS, TpsLabel, subsystem_projector

SINGLET = bell(Bell.PSI_MINUS)


def test_analytic_probs_examples():
    np.testing.assert_allclose(analytic_probs(SINGLET, TpsLabel.T123), [0, 0.5, 0.5, 0], atol=1e-15)
    np.testing.assert_allclose(analytic_probs(SINGLET, TpsLabel.T321), [0, 0, 0.5, 0.5], atol=1e-15)
    for l in ALL_LABELS:
        np.testing.assert_array_equal(analytic_probs(color_ket(ColorChannel.C), l), [1, 0, 0, 0])


def test_analytic_probs_sum_to_one(rng):
    for _ in range(100):
        psi = random_state(rng)
        for l in ALL_LABELS:
            assert abs(analytic_probs(psi, l).sum() - 1) < 1e-12


def test_sample_singlet_million_shots():
    c = sample_counts(ExperimentConfig(SINGLET, TpsLabel.T123, 10**6, 7))
    assert c.joint[0] == 0 and c.joint[3] == 0
    assert abs(c.joint[1] / c.shots - 0.5) < 0.005


def test_single_shot():
    c = sample_counts(ExperimentConfig(builtin_state("uniform"), TpsLabel.T123, 1, 3))
    assert sum(n > 0 for n in c.joint) == 1


def test_shots_must_be_positive():
    with pytest.raises(ValueError):
        ExperimentConfig(SINGLET, TpsLabel.T123, 0, 0)


def test_seed_determinism():
    cfg = ExperimentConfig(builtin_state("uniform"), "321", 5000, 42)
    assert sample_counts(cfg) == sample_counts(cfg)
    other = sample_counts(ExperimentConfig(builtin_state("uniform"), "321", 5000, 43))
    assert other != sample_counts(cfg)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5000), st.integers(0, 2**32), st.sampled_from(ALL_LABELS))
def test_marginals_are_row_column_sums(shots, seed, label):
    c = sample_counts(ExperimentConfig(builtin_state("uniform"), label, shots, seed))
    n00, n01, n10, n11 = c.joint
    assert sum(c.joint) == shots
    assert c.left_counts == (n00 + n01, n10 + n11)
    assert c.right_counts == (n00 + n10, n01 + n11)


def test_counts_table_rejects_bad_totals():
    with pytest.raises(ValueError):
        CountsTable(TpsLabel.T123, (1, 2, 3, 4), 11)


def test_correlation_stats_singlet():
    c = sample_counts(ExperimentConfig(SINGLET, TpsLabel.T123, 20000, 1))
    s = correlation_stats(c)
    assert s.iff_freq == 0.0 and s.xor_freq == 1.0
    # the 321 left-bit-0 projector has zero expectation in the singlet
    p = subsystem_projector(TpsLabel.T321, Side.LEFT, 0).projector
    assert np.vdot(SINGLET, p @ SINGLET).real == pytest.approx(s.iff_freq)


def test_uniform_state_frequencies():
    shots = 100_000
    c = sample_counts(ExperimentConfig(builtin_state("uniform"), TpsLabel.T123, shots, 5))
    se = np.sqrt(0.25 * 0.75 / shots)
    for p in c.joint_probs:
        assert abs(p - 0.25) < 6 * se


@pytest.mark.parametrize("name", ["singlet", "phi+", "uniform", "psi+", "g"])
def test_duality_bridge(name):
    diff, se = duality_gap(builtin_state(name), 100_000, 11)
    assert abs(diff) <= 6 * se


def test_empirical_frequencies_track_analytic(rng):
    psi = random_state(rng)
    shots = 200_000
    for l in ALL_LABELS:
        c = sample_counts(ExperimentConfig(psi, l, shots, 17))
        p = analytic_probs(psi, l)
        se = np.sqrt(p * (1 - p) / shots)
        assert np.all(np.abs(np.array(c.joint_probs) - p) <= 6 * se + 1e-12)
