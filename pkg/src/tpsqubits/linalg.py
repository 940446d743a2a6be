"""Fixed-shape complex linear algebra on C^2 and C^4.

Operators are plain ``numpy`` arrays of dtype complex128 with shape (2, 2)
(``Op2``) or (4, 4) (``Op4``); kets are shape (4,) arrays. The reference
basis index of the bit pair (r, s) is ``2*r + s``, which makes :func:`kron`
the standard Kronecker product.
"""

from __future__ import annotations

import numpy as np

from ._kernels import svd2_batch

ATOL = 1e-10
"""Library-wide absolute tolerance on matrix and vector entries."""

I2 = np.eye(2, dtype=np.complex128)
I4 = np.eye(4, dtype=np.complex128)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)
P0 = np.array([[1, 0], [0, 0]], dtype=np.complex128)
P1 = np.array([[0, 0], [0, 1]], dtype=np.complex128)

for _m in (I2, I4, SIGMA_1, SIGMA_2, SIGMA_3, P0, P1):
    _m.setflags(write=False)


def as_op(m, dim: int) -> np.ndarray:
    arr = np.asarray(m, dtype=np.complex128)
    if arr.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got shape {arr.shape}")
    return arr


def kron(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 operators: ``out[2r+s, 2u+v] = a[r,u] * b[s,v]``."""
    return np.kron(as_op(a, 2), as_op(b, 2))


def adjoint(m) -> np.ndarray:
    return np.conj(np.asarray(m, dtype=np.complex128)).T


def matmul(*ms) -> np.ndarray:
    out = np.asarray(ms[0], dtype=np.complex128)
    for m in ms[1:]:
        out = out @ np.asarray(m, dtype=np.complex128)
    return out


def conjugate(u, m) -> np.ndarray:
    """``u @ m @ u^dagger``."""
    u = np.asarray(u, dtype=np.complex128)
    return u @ np.asarray(m, dtype=np.complex128) @ adjoint(u)


def apply(m, psi) -> np.ndarray:
    """``m @ psi``. No renormalisation."""
    return np.asarray(m, dtype=np.complex128) @ np.asarray(psi, dtype=np.complex128)


def inner(phi, psi) -> complex:
    """<phi|psi>, antilinear in the first argument."""
    return complex(np.vdot(phi, psi))


def norm(x) -> float:
    """Euclidean norm for vectors, Frobenius norm for matrices."""
    return float(np.linalg.norm(np.asarray(x)))


def max_abs(x) -> float:
    x = np.asarray(x)
    return float(np.max(np.abs(x))) if x.size else 0.0


def is_unitary(m, tol: float = ATOL) -> bool:
    m = np.asarray(m, dtype=np.complex128)
    return max_abs(adjoint(m) @ m - np.eye(m.shape[0])) < tol


def is_hermitian(m, tol: float = ATOL) -> bool:
    return max_abs(np.asarray(m) - adjoint(m)) < tol


def is_projector(m, tol: float = ATOL) -> bool:
    m = np.asarray(m, dtype=np.complex128)
    return is_hermitian(m, tol) and max_abs(m @ m - m) < tol


def phase_distance(psi, phi) -> float:
    """Global-phase-insensitive distance ``sqrt(2 - 2|<psi|phi>|)`` for unit vectors.

    Evaluated as ``||psi - e^{i t} phi||`` with ``t = arg <phi|psi>``, which is
    the same number but does not lose half the digits to the square root near 0.
    """
    psi = np.asarray(psi, dtype=np.complex128)
    phi = np.asarray(phi, dtype=np.complex128)
    ov = np.vdot(phi, psi)
    ph = ov / abs(ov) if abs(ov) > 0.0 else 1.0
    return float(np.linalg.norm(psi - ph * phi))


def equal_exact(psi, phi, tol: float = ATOL) -> bool:
    """Componentwise equality, phase-sensitive."""
    return max_abs(np.asarray(psi) - np.asarray(phi)) < tol


def make_state(amplitudes, normalize: bool = False) -> np.ndarray:
    """Validate (and optionally normalise) four amplitudes into a ket.

    Raises ``ValueError`` for wrong arity, non-finite entries, a zero vector,
    or (without ``normalize``) a norm further than ``ATOL`` from 1.
    """
    psi = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
    if psi.shape != (4,):
        raise ValueError(f"expected 4 amplitudes, got {psi.size}")
    if not np.all(np.isfinite(psi)):
        raise ValueError("amplitudes must be finite")
    n = norm(psi)
    if n == 0.0:
        raise ValueError("state vector is zero")
    if normalize:
        return psi / n
    if abs(n - 1.0) > ATOL:
        raise ValueError(f"state is not normalized (norm={n!r})")
    return psi


def svd2(m) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Closed-form SVD of a 2x2 complex matrix.

    Returns ``(s, left, right)`` with ``s`` descending and non-negative and
    the singular vectors in the *columns* of ``left`` and ``right``::

        m == s[0] * outer(left[:, 0], right[:, 0].conj()) + s[1] * ...

    Built from the dominant eigenvector of ``m^dagger m`` (quadratic formula);
    the small singular value is read off as ``|<l1|m|r1>|`` rather than from
    the small eigenvalue, which keeps the reconstruction error at rounding
    level even for rank-deficient inputs.
    """
    m = as_op(m, 2)
    if not np.all(np.isfinite(m)):
        raise ValueError("svd2 needs finite entries")
    s, left, right = svd2_batch(m[np.newaxis])
    return s[0], left[0], right[0]
