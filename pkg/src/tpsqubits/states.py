"""Named states, SU(2) construction and sampling, local basis changes."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .linalg import ATOL, I2, SIGMA_1, SIGMA_2, SIGMA_3, conjugate, is_unitary, kron
from .tps import Side, TpsLabel, basis_ket

_R = 1.0 / np.sqrt(2.0)


class Bell(enum.Enum):
    PSI_MINUS = "psi-"
    PSI_PLUS = "psi+"
    PHI_MINUS = "phi-"
    PHI_PLUS = "phi+"


_BELL = {
    Bell.PSI_MINUS: (0, _R, -_R, 0),
    Bell.PSI_PLUS: (0, _R, _R, 0),
    Bell.PHI_MINUS: (_R, 0, 0, -_R),
    Bell.PHI_PLUS: (_R, 0, 0, _R),
}


def bell(kind: Bell) -> np.ndarray:
    return np.array(_BELL[Bell(kind)], dtype=np.complex128)


def singlet() -> np.ndarray:
    return bell(Bell.PSI_MINUS)


class ColorChannel(enum.IntEnum):
    C = 0
    M = 1
    Y = 2
    G = 3


def color_ket(c: ColorChannel) -> np.ndarray:
    e = np.zeros(4, dtype=np.complex128)
    e[int(ColorChannel(c))] = 1.0
    return e


BUILTIN_STATES = {
    "singlet": lambda: bell(Bell.PSI_MINUS),
    "psi+": lambda: bell(Bell.PSI_PLUS),
    "phi+": lambda: bell(Bell.PHI_PLUS),
    "phi-": lambda: bell(Bell.PHI_MINUS),
    "c": lambda: color_ket(ColorChannel.C),
    "m": lambda: color_ket(ColorChannel.M),
    "y": lambda: color_ket(ColorChannel.Y),
    "g": lambda: color_ket(ColorChannel.G),
    "uniform": lambda: np.full(4, 0.5, dtype=np.complex128),
}


def builtin_state(name: str) -> np.ndarray:
    try:
        return BUILTIN_STATES[name.lower()]()
    except KeyError:
        raise ValueError(f"unknown state {name!r}; choose from {', '.join(BUILTIN_STATES)}") from None


@dataclass(frozen=True)
class Su2Params:
    axis: tuple[float, float, float]
    angle: float


def su2(p: Su2Params) -> np.ndarray:
    """``exp(-i angle/2 * axis . sigma)`` in closed form."""
    n = np.asarray(p.axis, dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > ATOL:
        raise ValueError(f"SU(2) axis must be a unit 3-vector, got {p.axis!r}")
    half = 0.5 * p.angle
    ns = n[0] * SIGMA_1 + n[1] * SIGMA_2 + n[2] * SIGMA_3
    return np.cos(half) * I2 - 1j * np.sin(half) * ns


def quaternion_to_su2(q) -> np.ndarray:
    """Unit quaternion (w, x, y, z) -> ``w I - i (x s1 + y s2 + z s3)``."""
    w, x, y, z = q
    return np.array([[w - 1j * z, -y - 1j * x], [y - 1j * x, w + 1j * z]], dtype=np.complex128)


def haar_su2(rng: np.random.Generator) -> np.ndarray:
    """Haar-random SU(2) element: a uniformly random unit quaternion."""
    q = rng.standard_normal(4)
    return quaternion_to_su2(q / np.linalg.norm(q))


def haar_su2_batch(rng: np.random.Generator, n: int) -> np.ndarray:
    q = rng.standard_normal((n, 4))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    w, x, y, z = q.T
    out = np.empty((n, 2, 2), dtype=np.complex128)
    out[:, 0, 0] = w - 1j * z
    out[:, 0, 1] = -y - 1j * x
    out[:, 1, 0] = y - 1j * x
    out[:, 1, 1] = w + 1j * z
    return out


def random_state(rng: np.random.Generator) -> np.ndarray:
    """Uniformly random unit vector in C^4."""
    z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    return z / np.linalg.norm(z)


def local_change(label, v, w, m) -> np.ndarray:
    """Conjugate ``m`` by ``v (x)_123 w``.

    The local unitary is always taken in the Kronecker product, whatever
    structure ``m`` was built in; ``label`` only names that structure. The map
    is a *-automorphism, so projectors stay projectors of the same rank.
    """
    TpsLabel.parse(label)
    if not is_unitary(v) or not is_unitary(w):
        raise ValueError("local_change needs unitary V and W")
    return conjugate(kron(v, w), m)


def rotated_projector(label, v, w, side: Side, bit: int) -> np.ndarray:
    """Projector onto the ``kron(v, w)``-image of the subsystem eigenspace, built from kets."""
    label = TpsLabel.parse(label)
    k = kron(v, w)
    out = np.zeros((4, 4), dtype=np.complex128)
    for other in (0, 1):
        r, s = (bit, other) if Side(side) is Side.LEFT else (other, bit)
        ket = k @ basis_ket(label, r, s)
        out += np.outer(ket, ket.conj())
    return out


__all__ = [
    "Bell",
    "BUILTIN_STATES",
    "ColorChannel",
    "Su2Params",
    "bell",
    "builtin_state",
    "color_ket",
    "haar_su2",
    "haar_su2_batch",
    "local_change",
    "quaternion_to_su2",
    "random_state",
    "rotated_projector",
    "singlet",
    "su2",
]
