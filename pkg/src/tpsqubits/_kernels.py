"""Hot inner loops.

Each kernel exists twice: a loop version compiled with numba and a vectorised
numpy version. ``svd2_batch`` and ``categorical_counts`` dispatch on
``HAVE_NUMBA``; both variants are importable directly for tests and benchmarks.
"""

import numpy as np

from ._accel import HAVE_NUMBA, maybe_njit


# ---------------------------------------------------------------------------
# closed-form 2x2 complex SVD
# ---------------------------------------------------------------------------

@maybe_njit(cache=True)
def _sdiv(z, r):
    # complex / real, componentwise so a subnormal r cannot overflow
    return complex(z.real / r, z.imag / r)


@maybe_njit(cache=True)
def svd2_one(m, s, left, right):
    """SVD of one 2x2 complex matrix into preallocated outputs.

    ``left[:, k]`` and ``right[:, k]`` are the k-th singular vectors, so that
    ``m == left @ diag(s) @ right.conj().T``.
    """
    # work on m / max|m_ij| so tiny or huge entries neither underflow nor overflow
    scale = max(abs(m[0, 0]), abs(m[0, 1]), abs(m[1, 0]), abs(m[1, 1]))
    if scale == 0.0:
        scale = 1.0
    m00 = _sdiv(m[0, 0], scale)
    m01 = _sdiv(m[0, 1], scale)
    m10 = _sdiv(m[1, 0], scale)
    m11 = _sdiv(m[1, 1], scale)
    # H = M^dagger M
    a = (m00.real * m00.real + m00.imag * m00.imag) + (m10.real * m10.real + m10.imag * m10.imag)
    d = (m01.real * m01.real + m01.imag * m01.imag) + (m11.real * m11.real + m11.imag * m11.imag)
    b = np.conj(m00) * m01 + np.conj(m10) * m11
    half = 0.5 * (a - d)
    lam = 0.5 * (a + d) + np.hypot(half, abs(b))

    # two candidate eigenvectors of H for lam; keep the better conditioned one
    x0 = b
    x1 = lam - a + 0j
    y0 = lam - d + 0j
    y1 = np.conj(b)
    nx = np.hypot(abs(x0), abs(x1))
    ny = np.hypot(abs(y0), abs(y1))
    if nx >= ny and nx > 0.0:
        r00 = _sdiv(x0, nx)
        r10 = _sdiv(x1, nx)
    elif ny > 0.0:
        r00 = _sdiv(y0, ny)
        r10 = _sdiv(y1, ny)
    else:
        # H proportional to the identity
        r00 = 1.0 + 0j
        r10 = 0.0 + 0j
    r01 = -np.conj(r10)
    r11 = np.conj(r00)

    l00 = m00 * r00 + m01 * r10
    l10 = m10 * r00 + m11 * r10
    s0 = np.hypot(abs(l00), abs(l10))
    if s0 == 0.0:
        s[0] = 0.0
        s[1] = 0.0
        left[0, 0] = 1.0
        left[1, 0] = 0.0
        left[0, 1] = 0.0
        left[1, 1] = 1.0
        right[0, 0] = 1.0
        right[1, 0] = 0.0
        right[0, 1] = 0.0
        right[1, 1] = 1.0
        return
    l00 = _sdiv(l00, s0)
    l10 = _sdiv(l10, s0)
    l01 = -np.conj(l10)
    l11 = np.conj(l00)
    # <l1| M |r1>; its modulus is the small singular value, its phase goes into l1
    c = np.conj(l01) * (m00 * r01 + m01 * r11) + np.conj(l11) * (m10 * r01 + m11 * r11)
    s1 = abs(c)
    if s1 > 0.0:
        ph = _sdiv(c, s1)
        ph = _sdiv(ph, abs(ph))  # c may be subnormal, so c / |c| is not unit to rounding
        l01 = l01 * ph
        l11 = l11 * ph
    s0 = s0 * scale
    s1 = s1 * scale
    if s1 > s0:
        # only reachable through rounding in the degenerate case
        s[0] = s1
        s[1] = s0
        left[0, 0] = l01
        left[1, 0] = l11
        left[0, 1] = l00
        left[1, 1] = l10
        right[0, 0] = r01
        right[1, 0] = r11
        right[0, 1] = r00
        right[1, 1] = r10
    else:
        s[0] = s0
        s[1] = s1
        left[0, 0] = l00
        left[1, 0] = l10
        left[0, 1] = l01
        left[1, 1] = l11
        right[0, 0] = r00
        right[1, 0] = r10
        right[0, 1] = r01
        right[1, 1] = r11


@maybe_njit(cache=True)
def svd2_batch_loop(ms):
    n = ms.shape[0]
    s = np.empty((n, 2))
    left = np.empty((n, 2, 2), dtype=np.complex128)
    right = np.empty((n, 2, 2), dtype=np.complex128)
    for i in range(n):
        svd2_one(ms[i], s[i], left[i], right[i])
    return s, left, right


def _cdiv(z, r):
    # numpy's complex / real goes through a complex reciprocal that overflows
    # for subnormal r; divide the components instead
    return z.real / r + 1j * (z.imag / r)


def svd2_batch_numpy(ms):
    """Vectorised twin of :func:`svd2_batch_loop`; same algorithm, same branches."""
    ms = np.asarray(ms, dtype=np.complex128)
    n = ms.shape[0]
    scale = np.abs(ms.reshape(n, 4)).max(axis=1, initial=0.0)
    scale = np.where(scale == 0.0, 1.0, scale)
    ms = _cdiv(ms, scale[:, np.newaxis, np.newaxis])
    m00, m01, m10, m11 = ms[:, 0, 0], ms[:, 0, 1], ms[:, 1, 0], ms[:, 1, 1]
    a = np.abs(m00) ** 2 + np.abs(m10) ** 2
    d = np.abs(m01) ** 2 + np.abs(m11) ** 2
    b = np.conj(m00) * m01 + np.conj(m10) * m11
    lam = 0.5 * (a + d) + np.hypot(0.5 * (a - d), np.abs(b))

    x0, x1 = b, (lam - a).astype(np.complex128)
    y0, y1 = (lam - d).astype(np.complex128), np.conj(b)
    nx = np.hypot(np.abs(x0), np.abs(x1))
    ny = np.hypot(np.abs(y0), np.abs(y1))
    use_x = (nx >= ny) & (nx > 0.0)
    use_y = ~use_x & (ny > 0.0)
    r00 = np.ones(n, dtype=np.complex128)
    r10 = np.zeros(n, dtype=np.complex128)
    r00[use_x] = _cdiv(x0[use_x], nx[use_x])
    r10[use_x] = _cdiv(x1[use_x], nx[use_x])
    r00[use_y] = _cdiv(y0[use_y], ny[use_y])
    r10[use_y] = _cdiv(y1[use_y], ny[use_y])
    r01 = -np.conj(r10)
    r11 = np.conj(r00)

    l00 = m00 * r00 + m01 * r10
    l10 = m10 * r00 + m11 * r10
    s0 = np.hypot(np.abs(l00), np.abs(l10))
    zero = s0 == 0.0
    safe = np.where(zero, 1.0, s0)
    l00 = np.where(zero, 1.0, _cdiv(l00, safe))
    l10 = np.where(zero, 0.0, _cdiv(l10, safe))
    l01 = -np.conj(l10)
    l11 = np.conj(l00)
    c = np.conj(l01) * (m00 * r01 + m01 * r11) + np.conj(l11) * (m10 * r01 + m11 * r11)
    s1 = np.abs(c)
    ph = np.where(s1 > 0.0, _cdiv(c, np.where(s1 > 0.0, s1, 1.0)), 1.0)
    ph = ph / np.abs(ph)
    l01 = l01 * ph
    l11 = l11 * ph
    # zero matrix: identity bases
    r00 = np.where(zero, 1.0, r00)
    r10 = np.where(zero, 0.0, r10)
    r01 = np.where(zero, 0.0, r01)
    r11 = np.where(zero, 1.0, r11)
    l01 = np.where(zero, 0.0, l01)
    l11 = np.where(zero, 1.0, l11)
    s1 = np.where(zero, 0.0, s1)

    s = np.stack([s0, s1], axis=1) * scale[:, np.newaxis]
    left = np.empty((n, 2, 2), dtype=np.complex128)
    right = np.empty((n, 2, 2), dtype=np.complex128)
    left[:, 0, 0], left[:, 1, 0], left[:, 0, 1], left[:, 1, 1] = l00, l10, l01, l11
    right[:, 0, 0], right[:, 1, 0], right[:, 0, 1], right[:, 1, 1] = r00, r10, r01, r11
    swap = s1 > s0
    if swap.any():
        s[swap] = s[swap][:, ::-1]
        left[swap] = left[swap][:, :, ::-1]
        right[swap] = right[swap][:, :, ::-1]
    return s, left, right


def svd2_batch(ms):
    ms = np.ascontiguousarray(ms, dtype=np.complex128)
    if HAVE_NUMBA:
        return svd2_batch_loop(ms)
    return svd2_batch_numpy(ms)


# ---------------------------------------------------------------------------
# inverse-CDF categorical sampling
# ---------------------------------------------------------------------------

@maybe_njit(cache=True)
def categorical_counts_loop(cdf, uniforms):
    """Count outcomes, one shot at a time: outcome = first k with u < cdf[k]."""
    k_max = cdf.shape[0]
    counts = np.zeros(k_max, dtype=np.int64)
    for i in range(uniforms.shape[0]):
        u = uniforms[i]
        k = 0
        while k < k_max - 1 and u >= cdf[k]:
            k += 1
        counts[k] += 1
    return counts


def categorical_counts_numpy(cdf, uniforms):
    idx = np.searchsorted(cdf, uniforms, side="right")
    np.minimum(idx, len(cdf) - 1, out=idx)
    return np.bincount(idx, minlength=len(cdf)).astype(np.int64)


def categorical_counts(cdf, uniforms):
    cdf = np.ascontiguousarray(cdf, dtype=np.float64)
    uniforms = np.ascontiguousarray(uniforms, dtype=np.float64)
    if HAVE_NUMBA:
        return categorical_counts_loop(cdf, uniforms)
    return categorical_counts_numpy(cdf, uniforms)
