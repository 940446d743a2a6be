"""Two-qubit tensor product structures and relative entanglement."""

__version__ = "0.1.0"

from .linalg import ATOL, phase_distance  # noqa: E402
from .tps import Side, TpsLabel, basis_ket, compose, perm_unitary, subsystem_projector, tensor_op  # noqa: E402
from .states import Bell, ColorChannel, bell, color_ket, haar_su2, local_change, su2  # noqa: E402
from .entanglement import classify_all, reduced_purity, schmidt  # noqa: E402
from .sim import ExperimentConfig, analytic_probs, correlation_stats, sample_counts  # noqa: E402

__all__ = [
    "ATOL",
    "Bell",
    "ColorChannel",
    "ExperimentConfig",
    "Side",
    "TpsLabel",
    "analytic_probs",
    "basis_ket",
    "bell",
    "classify_all",
    "color_ket",
    "compose",
    "correlation_stats",
    "haar_su2",
    "local_change",
    "perm_unitary",
    "phase_distance",
    "reduced_purity",
    "sample_counts",
    "schmidt",
    "subsystem_projector",
    "su2",
    "tensor_op",
]
