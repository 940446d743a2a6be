"""Born-rule Monte Carlo of the four-channel decay experiment.

A wiring (TPS label) turns each detected color into a pair of bits; the
simulation draws joint outcomes ``(alpha, beta)`` with probabilities
``|<alpha beta_label|psi>|^2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import categorical_counts
from .tps import TpsLabel, perm_unitary

OUTCOMES = ("00", "01", "10", "11")


@dataclass(frozen=True)
class ExperimentConfig:
    state: np.ndarray
    label: TpsLabel
    shots: int
    seed: int

    def __post_init__(self):
        if int(self.shots) < 1:
            raise ValueError("shots must be >= 1")
        object.__setattr__(self, "label", TpsLabel.parse(self.label))


@dataclass(frozen=True)
class CountsTable:
    label: TpsLabel
    joint: tuple[int, int, int, int]
    shots: int

    def __post_init__(self):
        if sum(self.joint) != self.shots:
            raise ValueError("joint counts must sum to shots")

    @property
    def joint_probs(self) -> tuple[float, ...]:
        return tuple(n / self.shots for n in self.joint)

    @property
    def left_counts(self) -> tuple[int, int]:
        n00, n01, n10, n11 = self.joint
        return n00 + n01, n10 + n11

    @property
    def right_counts(self) -> tuple[int, int]:
        n00, n01, n10, n11 = self.joint
        return n00 + n10, n01 + n11

    @property
    def left_marginal(self) -> tuple[float, float]:
        return tuple(n / self.shots for n in self.left_counts)

    @property
    def right_marginal(self) -> tuple[float, float]:
        return tuple(n / self.shots for n in self.right_counts)

    @property
    def iff_freq(self) -> float:
        return (self.joint[0] + self.joint[3]) / self.shots

    def to_dict(self) -> dict:
        return {
            "label": self.label.code,
            "shots": self.shots,
            "joint_counts": dict(zip(OUTCOMES, self.joint)),
            "joint_probs": dict(zip(OUTCOMES, self.joint_probs)),
            "left_marginal": list(self.left_marginal),
            "right_marginal": list(self.right_marginal),
            "iff_freq": self.iff_freq,
        }


@dataclass(frozen=True)
class CorrelationStats:
    iff_freq: float
    xor_freq: float
    left_bias: float
    right_bias: float


def analytic_probs(state, label) -> np.ndarray:
    """Joint probabilities for outcomes 00, 01, 10, 11."""
    amps = perm_unitary(label).conj().T @ np.asarray(state, dtype=np.complex128)
    return np.abs(amps) ** 2


def _cdf(p: np.ndarray) -> np.ndarray:
    p = np.clip(np.asarray(p, dtype=float), 0.0, None)
    cdf = np.cumsum(p) / p.sum()
    # pin the tail to exactly 1 so u in [0, 1) never falls past the last possible outcome
    last = int(np.flatnonzero(p)[-1])
    cdf[last:] = 1.0
    return cdf


def sample_counts(cfg: ExperimentConfig) -> CountsTable:
    """``cfg.shots`` independent categorical draws, inverse-CDF per shot."""
    rng = np.random.default_rng(cfg.seed)
    cdf = _cdf(analytic_probs(cfg.state, cfg.label))
    counts = np.zeros(4, dtype=np.int64)
    remaining = int(cfg.shots)
    chunk = 1 << 20
    while remaining:
        n = min(chunk, remaining)
        counts += categorical_counts(cdf, rng.random(n))
        remaining -= n
    return CountsTable(cfg.label, tuple(int(c) for c in counts), int(cfg.shots))


def correlation_stats(counts: CountsTable) -> CorrelationStats:
    iff = counts.iff_freq
    return CorrelationStats(iff, 1.0 - iff, counts.left_marginal[0], counts.right_marginal[0])


def duality_gap(state, shots: int, seed: int) -> tuple[float, float]:
    """IFF frequency under 123 vs Left-bit-0 frequency under 321 from independent runs.

    Returns ``(difference, combined standard error)``; both runs get their
    own child seed.
    """
    s123, s321 = np.random.SeedSequence(seed).spawn(2)
    a = sample_counts(ExperimentConfig(state, TpsLabel.T123, shots, int(s123.generate_state(1)[0])))
    b = sample_counts(ExperimentConfig(state, TpsLabel.T321, shots, int(s321.generate_state(1)[0])))
    pa = a.iff_freq
    pb = b.left_marginal[0]
    se = np.sqrt(pa * (1 - pa) / a.shots + pb * (1 - pb) / b.shots)
    return pa - pb, float(se)
