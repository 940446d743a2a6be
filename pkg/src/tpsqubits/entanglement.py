"""Schmidt data and separability relative to a chosen tensor product structure."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._kernels import svd2_batch
from .linalg import svd2
from .tps import ALL_LABELS, Side, TpsLabel, perm_unitary

RANK_THRESHOLD = 1e-8
"""Second Schmidt coefficient below this means product (rank 1)."""

NEAR_DEGENERATE_FACTOR = 10.0


class Separability(enum.Enum):
    PRODUCT = "Product"
    ENTANGLED = "Entangled"


def coefficient_matrix(psi, label) -> np.ndarray:
    """``C[r, s] = <rs_label|psi>``."""
    u = perm_unitary(label)
    return (u.conj().T @ np.asarray(psi, dtype=np.complex128)).reshape(2, 2)


def _fix_phases(left: np.ndarray, right: np.ndarray) -> None:
    # first nonzero entry of each left vector real-positive; right absorbs the phase
    for k in range(2):
        col = left[:, k]
        j = 0 if abs(col[0]) > RANK_THRESHOLD else 1
        ph = col[j] / abs(col[j])
        mag = abs(col[j])
        left[:, k] = col / ph
        left[j, k] = mag  # exactly real, no rounding residue in the imaginary part
        right[:, k] = right[:, k] * ph


@dataclass(frozen=True)
class SchmidtDecomposition:
    """``psi = sum_k coefficients[k] * left[:, k] (x)_label right[:, k]``."""

    label: TpsLabel
    coefficients: np.ndarray
    left_basis: np.ndarray
    right_basis: np.ndarray
    rank: int
    near_degenerate: bool

    @property
    def separability(self) -> Separability:
        return Separability.PRODUCT if self.rank == 1 else Separability.ENTANGLED

    def reconstruct(self) -> np.ndarray:
        c = sum(
            self.coefficients[k] * np.outer(self.left_basis[:, k], self.right_basis[:, k])
            for k in range(2)
        )
        return perm_unitary(self.label) @ c.reshape(4)


def _rank(s1: float) -> tuple[int, bool]:
    near = RANK_THRESHOLD / NEAR_DEGENERATE_FACTOR <= s1 <= RANK_THRESHOLD * NEAR_DEGENERATE_FACTOR
    return (1 if s1 < RANK_THRESHOLD else 2), near


def schmidt(psi, label) -> SchmidtDecomposition:
    label = TpsLabel.parse(label)
    c = coefficient_matrix(psi, label)
    s, left, right = svd2(c)
    # C = sum s_k l_k r_k^dagger, so the right Schmidt kets are conj(r_k)
    right = right.conj()
    left = left.copy()
    _fix_phases(left, right)
    rank, near = _rank(float(s[1]))
    return SchmidtDecomposition(label, s.copy(), left, right, rank, near)


def schmidt_coefficients_batch(states, label) -> np.ndarray:
    """Schmidt coefficients of many states at once, shape (n, 2)."""
    states = np.asarray(states, dtype=np.complex128)
    u = perm_unitary(label)
    coeffs = (states @ u.conj()).reshape(-1, 2, 2)
    s, _, _ = svd2_batch(coeffs)
    return s


def reduced_purity(psi, label, side: Side) -> float:
    """Tr(rho_side^2), with the partial trace taken in the label's basis."""
    return float(reduced_purity_batch(np.asarray(psi)[np.newaxis], label, side)[0])


def reduced_purity_batch(states, label, side: Side) -> np.ndarray:
    states = np.asarray(states, dtype=np.complex128)
    u = perm_unitary(label)
    rho = np.einsum("ni,nj->nij", states, states.conj())
    rho = np.einsum("ki,nij,jl->nkl", u.conj().T, rho, u).reshape(-1, 2, 2, 2, 2)
    if Side(side) is Side.LEFT:
        red = np.einsum("narbr->nab", rho)
    else:
        red = np.einsum("nrarb->nab", rho)
    return np.einsum("nab,nba->n", red, red).real


@dataclass(frozen=True)
class LabelVerdict:
    separability: Separability
    coefficients: tuple[float, float]
    near_degenerate: bool


@dataclass(frozen=True)
class TpsClassification:
    verdicts: dict
    threshold: float = RANK_THRESHOLD

    def __getitem__(self, label) -> LabelVerdict:
        return self.verdicts[TpsLabel.parse(label)]

    def to_dict(self) -> dict:
        return {
            "threshold": self.threshold,
            "labels": {
                l.code: {
                    "separability": v.separability.value,
                    "schmidt_coefficients": list(v.coefficients),
                    "second_coefficient": v.coefficients[1],
                    "near_degenerate": v.near_degenerate,
                }
                for l, v in self.verdicts.items()
            },
        }


def classify(psi, labels=ALL_LABELS) -> TpsClassification:
    verdicts = {}
    for l in labels:
        d = schmidt(psi, l)
        verdicts[TpsLabel.parse(l)] = LabelVerdict(
            d.separability, (float(d.coefficients[0]), float(d.coefficients[1])), d.near_degenerate
        )
    return TpsClassification(verdicts)


def classify_all(psi) -> TpsClassification:
    return classify(psi, ALL_LABELS)
