"""Mechanical verification of the two-qubit TPS identities.

Every check returns a :class:`CheckResult`. Equalities contribute their
largest entry-wise (or phase-distance) deviation; inequalities that fail
contribute a deviation of 1.0, so ``passed`` is always
``max_deviation < tolerance``.

Exact identities are held to 1e-12. Checks that sample SU(2) use 1e-10.
"""

from __future__ import annotations

import datetime
import functools
import itertools
import json
import zlib
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .entanglement import schmidt
from .linalg import (
    I2,
    I4,
    P0,
    P1,
    SIGMA_1,
    SIGMA_2,
    SIGMA_3,
    conjugate,
    kron,
    max_abs,
    phase_distance,
)
from .states import Bell, bell, color_ket, ColorChannel, haar_su2, local_change, random_state, rotated_projector
from .tps import (
    ALL_LABELS,
    COLOR_SUM_TABLE,
    Side,
    TpsLabel,
    basis_ket,
    check_transcription,
    color_sum_projector,
    compose,
    index_map,
    mixed_product_defect,
    perm_unitary,
    subsystem_projector,
    subsystem_projector_kron,
    tensor_ket,
    tensor_op,
)

EXACT_TOL = 1e-12
SAMPLED_TOL = 1e-10
VIOLATION = 1.0

_R = 1.0 / np.sqrt(2.0)
KET0 = np.array([1, 0], dtype=np.complex128)
KET1 = np.array([0, 1], dtype=np.complex128)
PLUS_1 = (KET0 + KET1) * _R
MINUS_1 = (KET0 - KET1) * _R

T123, T132, T213, T231, T312, T321 = (
    TpsLabel.T123,
    TpsLabel.T132,
    TpsLabel.T213,
    TpsLabel.T231,
    TpsLabel.T312,
    TpsLabel.T321,
)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    refs: tuple[str, ...]
    max_deviation: float
    tolerance: float
    passed: bool
    details: str
    components: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "refs": list(self.refs),
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "details": self.details,
            "components": dict(self.components),
        }


class _Tally:
    """Collects named deviations for one check."""

    def __init__(self):
        self.parts: dict[str, float] = {}

    def eq(self, name, lhs, rhs):
        self._put(name, max_abs(np.asarray(lhs) - np.asarray(rhs)))

    def phase(self, name, psi, phi):
        self._put(name, phase_distance(psi, phi))

    def value(self, name, dev):
        self._put(name, abs(float(dev)))

    def holds(self, name, condition: bool):
        self._put(name, 0.0 if condition else VIOLATION)

    def _put(self, name, dev):
        self.parts[name] = max(self.parts.get(name, 0.0), float(dev))

    def result(self, check_id, refs, tol, details) -> CheckResult:
        worst = max(self.parts.values()) if self.parts else 0.0
        return CheckResult(check_id, tuple(refs), worst, tol, worst < tol, details, dict(self.parts))


def _paulis():
    return {"I": I2, "s1": SIGMA_1, "s2": SIGMA_2, "s3": SIGMA_3}


def _random_op2(rng):
    return rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def check_permutation_unitaries() -> CheckResult:
    t = _Tally()
    t.value("transcribed-vs-generated", check_transcription())
    for l in ALL_LABELS:
        u = perm_unitary(l)
        t.eq(f"unitary-{l}", u.conj().T @ u, I4)
        t.holds(f"fixes-0-{l}", u[0, 0] == 1 and np.count_nonzero(u) == 4)
        a, b, c = l.perm
        for (r, s), k in zip(((0, 0), (0, 1), (1, 0), (1, 1)), (0, a, b, c)):
            t.eq(f"basis-ket-{l}", basis_ket(l, r, s), color_ket(ColorChannel(k)))
    t.eq("identity-123", perm_unitary(T123), I4)
    for c in ColorChannel:
        r, s = divmod(int(c), 2)
        t.eq("color-basis", color_ket(c), np.kron([KET0, KET1][r], [KET0, KET1][s]))
    return t.result(
        "permutation-unitaries",
        ("color-basis", "tps-basis-relabeling", "permutation-unitary-matrices"),
        EXACT_TOL,
        "U_abc transcribed vs regenerated from 0->0,1->a,2->b,3->c; |rs_abc> = U_abc|2r+s>; "
        "|0>=|00>=|C>, |1>=|01>=|M>, |2>=|10>=|Y>, |3>=|11>=|G>",
    )


_EXPECTED_TEXT = {
    (T123, Side.LEFT): ("0 of Alice", "1 of Alice"),
    (T123, Side.RIGHT): ("0 of Bob", "1 of Bob"),
    (T321, Side.LEFT): ("Alice IFF Bob", "Alice XOR Bob"),
    (T321, Side.RIGHT): ("0 of Bob", "1 of Bob"),
    (T213, Side.LEFT): ("0 of Bob", "1 of Bob"),
    (T213, Side.RIGHT): ("0 of Alice", "1 of Alice"),
}


def check_projector_algebra(projector=subsystem_projector) -> CheckResult:
    """All 24 subsystem projectors against their color sums, plus commutation."""
    t = _Tally()
    props = []
    for l in ALL_LABELS:
        table = COLOR_SUM_TABLE[l]
        for i, (side, bit) in enumerate(((Side.LEFT, 0), (Side.LEFT, 1), (Side.RIGHT, 0), (Side.RIGHT, 1))):
            p = projector(l, side, bit)
            m = np.asarray(p.projector)
            props.append(m)
            t.eq("color-sum", m, color_sum_projector(table[i]))
            t.eq("conjugation-law", m, subsystem_projector_kron(l, side, bit))
            t.eq("idempotent", m @ m, m)
            t.eq("hermitian", m, m.conj().T)
            t.value("trace-2", np.trace(m).real - 2.0)
            if (l, side) in _EXPECTED_TEXT:
                t.holds("proposition-text", p.text == _EXPECTED_TEXT[(l, side)][bit])
        for side in (Side.LEFT, Side.RIGHT):
            t.eq("complement", np.asarray(projector(l, side, 0).projector) + np.asarray(projector(l, side, 1).projector), I4)
    for a, b in itertools.combinations(props, 2):
        t.eq("commute", a @ b, b @ a)

    # marginal projectors as row / column sums of the P_ab grid
    pab = {(a, b): kron([P0, P1][a], [P0, P1][b]) for a in (0, 1) for b in (0, 1)}
    for a in (0, 1):
        t.eq("row-sum", pab[a, 0] + pab[a, 1], kron([P0, P1][a], I2))
        t.eq("column-sum", pab[0, a] + pab[1, a], kron(I2, [P0, P1][a]))
    for l in ALL_LABELS:
        grid = {(r, s): np.outer(basis_ket(l, r, s), basis_ket(l, r, s).conj()) for r in (0, 1) for s in (0, 1)}
        for a in (0, 1):
            t.eq("row-sum-tps", grid[a, 0] + grid[a, 1], tensor_op(l, [P0, P1][a], I2))
            t.eq("column-sum-tps", grid[0, a] + grid[1, a], tensor_op(l, I2, [P0, P1][a]))
    t.eq("kron-P0-I", kron(P0, I2), np.diag([1, 1, 0, 0]))
    return t.result(
        "projector-algebra",
        ("marginal-projectors", "projector-matrix-rows-columns", "six-tps-projector-tables"),
        EXACT_TOL,
        "P_a (x)_abc I and I (x)_abc P_a equal their color sums (e.g. P_0 (x)_321 I = P_C + P_G), "
        "are rank-2 projectors, complement to I, and all 24 commute",
    )


def check_pauli_dictionary() -> CheckResult:
    t = _Tally()
    t.eq("I(x)321 s3 = I(x)s3", tensor_op(T321, I2, SIGMA_3), kron(I2, SIGMA_3))
    t.eq("I(x)321 s1 = s1(x)s1", tensor_op(T321, I2, SIGMA_1), kron(SIGMA_1, SIGMA_1))
    t.eq("s1(x)321 I = s1(x)I", tensor_op(T321, SIGMA_1, I2), kron(SIGMA_1, I2))
    t.eq("s3(x)321 I = s3(x)s3", tensor_op(T321, SIGMA_3, I2), kron(SIGMA_3, SIGMA_3))

    e = np.eye(4, dtype=np.complex128)
    u321 = np.outer(e[0], e[0]) + np.outer(e[1], e[3]) + np.outer(e[2], e[2]) + np.outer(e[3], e[1])
    t.eq("U321 swaps 01 and 11", perm_unitary(T321), u321)
    for (a, b), image in {(0, 0): 0, (0, 1): 3, (1, 0): 2, (1, 1): 1}.items():
        pab = np.outer(e[2 * a + b], e[2 * a + b])
        t.eq("U321 P_ab U321^+", conjugate(perm_unitary(T321), pab), np.outer(e[image], e[image]))

    p0_321 = tensor_op(T321, P0, I2)
    t.eq("P0(x)321 I = (II + s3 s3)/2", p0_321, 0.5 * (kron(I2, I2) + kron(SIGMA_3, SIGMA_3)))
    t.eq("P0(x)321 I = P00 + P11", p0_321, np.diag([1, 0, 0, 1]))

    s3_321 = tensor_op(T321, SIGMA_3, I2)
    for (r, s), sign in {(0, 0): 1, (0, 1): 1, (1, 1): -1, (1, 0): -1}.items():
        k = basis_ket(T321, r, s)
        t.eq("s3(x)321 I on |rs_321>", s3_321 @ k, sign * k)
        t.eq("s3(x)321 I = s3(x)s3 on |rs_321>", s3_321 @ k, kron(SIGMA_3, SIGMA_3) @ k)

    # eigenvector families of the IFF bit
    f00, f11 = 0.6, 0.8
    f_par = f00 * e[0] + f11 * e[3]
    f_perp = f00 * e[1] + f11 * e[2]
    t.eq("f_par as 321 product", f_par, f00 * basis_ket(T321, 0, 0) + f11 * basis_ket(T321, 0, 1))
    t.eq("f_perp as 321 product", f_perp, f00 * basis_ket(T321, 1, 1) + f11 * basis_ket(T321, 1, 0))
    p1_321 = tensor_op(T321, P1, I2)
    t.eq("P0 f_par", p0_321 @ f_par, f_par)
    t.eq("P1 f_par", p1_321 @ f_par, 0 * f_par)
    t.eq("P0 f_perp", p0_321 @ f_perp, 0 * f_perp)
    t.eq("P1 f_perp", p1_321 @ f_perp, f_perp)
    t.eq("s3(x)321 I f_par", s3_321 @ f_par, f_par)
    t.eq("s3(x)321 I f_perp", s3_321 @ f_perp, -f_perp)
    for f in (f_par, f_perp):
        t.value("321-product rank", schmidt(f, T321).coefficients[1])
        t.holds("123-entangled", schmidt(f, T123).rank == 2)

    # two forms of negating the left bit
    g = f00 * basis_ket(T321, 0, 0) + f11 * basis_ket(T321, 0, 1)
    target = f00 * basis_ket(T321, 1, 0) + f11 * basis_ket(T321, 1, 1)
    t.eq("s1(x)321 I on f-family", tensor_op(T321, SIGMA_1, I2) @ g, target)
    t.eq("s1(x)I on f-family", kron(SIGMA_1, I2) @ (f00 * e[0] + f11 * e[3]), target)

    # swapped structure: Alice_213 = Bob_123 and sigma_mu (x)_213 sigma_nu = sigma_nu (x) sigma_mu
    paulis = _paulis()
    for (_, a), (_, b) in itertools.product(paulis.items(), repeat=2):
        t.eq("213 swaps factors", tensor_op(T213, a, b), kron(b, a))
    for bit in (0, 1):
        for l_a, s_a, l_b, s_b in (
            (T213, Side.LEFT, T123, Side.RIGHT),
            (T213, Side.RIGHT, T123, Side.LEFT),
            (T231, Side.RIGHT, T321, Side.LEFT),
            (T231, Side.LEFT, T321, Side.RIGHT),
            (T312, Side.LEFT, T321, Side.LEFT),
        ):
            t.eq(
                "bit dictionaries",
                subsystem_projector(l_a, s_a, bit).projector,
                subsystem_projector(l_b, s_b, bit).projector,
            )
    return t.result(
        "pauli-dictionary",
        (
            "pauli-dictionary-321",
            "left-bit-eigenvectors-321",
            "left-negation-321",
            "entangled-product-duality",
            "alice-bob-swap-213",
            "iff-bit-231",
        ),
        EXACT_TOL,
        "I(x)_321 s3 = I(x)s3, I(x)_321 s1 = s1(x)s1, s1(x)_321 I = s1(x)I, s3(x)_321 I = s3(x)s3; "
        "f00|00>+f11|11> = f00|00_321>+f11|01_321> is a 321-product eigenvector of P_0(x)_321 I",
    )


def check_bell_truth_values() -> CheckResult:
    t = _Tally()
    p0 = tensor_op(T321, P0, I2)
    p1 = tensor_op(T321, P1, I2)
    for kind in (Bell.PSI_MINUS, Bell.PSI_PLUS):
        psi = bell(kind)
        t.eq(f"P0 {kind.value}", p0 @ psi, 0 * psi)
        t.eq(f"P1 {kind.value}", p1 @ psi, psi)
    for kind in (Bell.PHI_MINUS, Bell.PHI_PLUS):
        psi = bell(kind)
        t.eq(f"P0 {kind.value}", p0 @ psi, psi)
        t.eq(f"P1 {kind.value}", p1 @ psi, 0 * psi)
    return t.result(
        "bell-truth-values",
        ("bell-truth-values-321",),
        EXACT_TOL,
        "(P_0 (x)_321 I)|Psi+-> = 0, (P_1 (x)_321 I)|Psi+-> = |Psi+->, and the reverse for |Phi+->",
    )


def check_local_basis_change(rng, n_samples: int = 100) -> CheckResult:
    t = _Tally()
    for _ in range(n_samples):
        v, w = haar_su2(rng), haar_su2(rng)
        k = kron(v, w)
        pv = [conjugate(v, P0), conjugate(v, P1)]
        pw = [conjugate(w, P0), conjugate(w, P1)]
        for a, b in itertools.product((0, 1), repeat=2):
            ket = np.kron(v[:, a], w[:, b])
            t.eq("rotated product basis", np.outer(ket, ket.conj()), kron(pv[a], pw[b]))
        for l in ALL_LABELS:
            for a, b in itertools.product((0, 1), repeat=2):
                pab = np.outer(basis_ket(l, a, b), basis_ket(l, a, b).conj())
                ket = k @ basis_ket(l, a, b)
                t.eq("any-tps rotated basis projector", local_change(l, v, w, pab), np.outer(ket, ket.conj()))
            images = []
            for side, bit in itertools.product((Side.LEFT, Side.RIGHT), (0, 1)):
                m = local_change(l, v, w, subsystem_projector(l, side, bit).projector)
                t.eq("rotated subsystem projector", m, rotated_projector(l, v, w, side, bit))
                t.eq("still a projector", m @ m, m)
                t.value("trace preserved", np.trace(m).real - 2.0)
                images.append(m)
            for a, b in itertools.combinations(images, 2):
                t.eq("images commute", a @ b, b @ a)
            # conjugation by V (x)_l W moves local operators within the same structure
            a_op, b_op = _random_op2(rng), _random_op2(rng)
            t.eq(
                "same-structure local unitary",
                conjugate(tensor_op(l, v, w), tensor_op(l, a_op, b_op)),
                tensor_op(l, conjugate(v, a_op), conjugate(w, b_op)),
            )
        # the Kronecker local unitary is such a map for 123 itself
        a_op, b_op = _random_op2(rng), _random_op2(rng)
        t.eq(
            "123 local unitary",
            local_change(T123, v, w, tensor_op(T123, a_op, b_op)),
            tensor_op(T123, conjugate(v, a_op), conjugate(w, b_op)),
        )
    return t.result(
        "local-basis-change",
        ("local-basis-change-123", "local-basis-change-any-tps", "local-change-not-tps-change"),
        SAMPLED_TOL,
        f"{n_samples} Haar pairs (V, W): (V(x)W) P_ab_abc (V(x)W)^+ is the projector on (V(x)W)|ab_abc> "
        "for every abc; the map preserves projectors, traces and commutation; the structure is unchanged",
    )


def _v_rotated(v, ket):
    # |x_V> (x)_abc |y_V> read as (V (x)_123 V) applied to |x> (x)_abc |y>
    return kron(v, v) @ ket


def check_singlet_identities(rng, n_samples: int = 100) -> CheckResult:
    t = _Tally()
    psi = bell(Bell.PSI_MINUS)
    e = np.eye(4, dtype=np.complex128)

    # product forms under 321 and 231
    form_321 = tensor_ket(T321, KET1, KET1 - KET0) * _R
    t.eq("(|01>-|10>)/sqrt2 = (|11_321>-|10_321>)/sqrt2", (e[1] - e[2]) * _R, (basis_ket(T321, 1, 1) - basis_ket(T321, 1, 0)) * _R)
    t.eq("singlet = |1>(x)321(|1>-|0>)/sqrt2", form_321, psi)
    t.eq("singlet-123 form", (tensor_ket(T123, KET0, KET1) - tensor_ket(T123, KET1, KET0)) * _R, psi)

    # eigen-relations
    t.eq("s3(x)321 I", tensor_op(T321, SIGMA_3, I2) @ psi, -psi)
    t.eq("I(x)321 s1", tensor_op(T321, I2, SIGMA_1) @ psi, -psi)
    t.eq("I(x)231 s3", tensor_op(T231, I2, SIGMA_3) @ psi, -psi)
    t.eq("s1(x)231 I", tensor_op(T231, SIGMA_1, I2) @ psi, -psi)
    t.eq("s3(x)321 s1", tensor_op(T321, SIGMA_3, SIGMA_1) @ psi, psi)
    t.eq("s1(x)231 s3", tensor_op(T231, SIGMA_1, SIGMA_3) @ psi, psi)
    t.phase("singlet = |-_3>(x)321|-_1>", tensor_ket(T321, KET1, MINUS_1), psi)
    t.phase("singlet = |-_1>(x)231|-_3>", tensor_ket(T231, MINUS_1, KET1), psi)

    # relative entanglement
    for l, coeffs in ((T123, (_R, _R)), (T213, (_R, _R)), (T321, (1.0, 0.0)), (T231, (1.0, 0.0))):
        t.eq(f"schmidt-{l}", schmidt(psi, l).coefficients, coeffs)

    for _ in range(n_samples):
        v = haar_su2(rng)
        k = kron(v, v)
        lhs_168 = (np.kron(v[:, 0], v[:, 1]) - np.kron(v[:, 1], v[:, 0])) * _R
        t.eq("singlet = (|0_V 1_V> - |1_V 0_V>)/sqrt2", lhs_168, psi)
        form_169 = _v_rotated(v, basis_ket(T321, 1, 1) - basis_ket(T321, 1, 0)) * _R
        t.phase("rotated 321 basis form", form_169, lhs_168)
        t.eq("rotated 321 basis form (components)", form_169, lhs_168)
        form_170 = _v_rotated(v, tensor_ket(T321, KET1, KET1 - KET0)) * _R
        t.eq("|1_V>(x)321(|1_V>-|0_V>) = |1>(x)321(|1>-|0>)", form_170, form_321)
        t.eq("singlet fixed by V(x)V", k @ psi, psi)
        rotated_obs = local_change(T321, v, v, tensor_op(T321, SIGMA_3, SIGMA_1))
        t.eq("(V s3 V^+)(x)321(V s1 V^+) fixes singlet", rotated_obs @ psi, psi)
    return t.result(
        "singlet-identities",
        (
            "singlet-product-form-321",
            "singlet-invariance-forms",
            "singlet-v-rotated-eigen",
            "singlet-rotated-eigen-relations",
            "singlet-factorizations-321-231",
        ),
        SAMPLED_TOL,
        f"|01>-|10> = |1>(x)_321(|1>-|0>) = |1_V>(x)_321(|1_V>-|0_V>) for {n_samples} Haar V; "
        "s3(x)_321 I, I(x)_321 s1, I(x)_231 s3, s1(x)_231 I give -1; s3(x)_321 s1, s1(x)_231 s3 give +1",
    )


def _orthogonal_to_singlet(rng) -> np.ndarray:
    psi = bell(Bell.PSI_MINUS)
    x = random_state(rng)
    x = x - np.vdot(psi, x) * psi
    return x / np.linalg.norm(x)


def check_uniqueness_theorem(rng, n_samples: int = 100, n_states: int = 100, n_rotations: int = 50) -> CheckResult:
    if n_samples < 10:
        raise ValueError("n_samples must be at least 10")
    t = _Tally()
    psi = bell(Bell.PSI_MINUS)
    for _ in range(n_samples):
        v = haar_su2(rng)
        t.phase("singlet invariant under V(x)V", kron(v, v) @ psi, psi)
        t.phase("phased singlet invariant", kron(v, v) @ (np.exp(0.7j) * psi), psi)

    worst = np.inf
    for _ in range(n_states):
        x = _orthogonal_to_singlet(rng)
        best = max(phase_distance(kron(v, v) @ x, x) for v in (haar_su2(rng) for _ in range(n_rotations)))
        worst = min(worst, best)
    t.holds("non-singlet states move", worst > 1e-3)

    # EPR chain with |+_3> = |0>, |-_3> = |1>
    plus3, minus3 = KET0, KET1
    t.phase("EPR 123", (tensor_ket(T123, minus3, plus3) - tensor_ket(T123, plus3, minus3)) * _R, psi)
    t.phase("EPR 321", tensor_ket(T321, minus3, minus3 - plus3) * _R, psi)
    t.phase("EPR 231", tensor_ket(T231, minus3 - plus3, minus3) * _R, psi)
    for _ in range(n_samples):
        v = haar_su2(rng)
        p3v, m3v = v @ plus3, v @ minus3
        t.phase("EPR 123 rotated", (tensor_ket(T123, m3v, p3v) - tensor_ket(T123, p3v, m3v)) * _R, psi)
        t.phase("EPR 321 rotated", _v_rotated(v, tensor_ket(T321, minus3, minus3 - plus3)) * _R, psi)
        t.phase("EPR 231 rotated", _v_rotated(v, tensor_ket(T231, minus3 - plus3, minus3)) * _R, psi)
        t.eq("sigma_3V eigenvectors", conjugate(v, SIGMA_3) @ np.stack([p3v, m3v], axis=1), np.stack([p3v, -m3v], axis=1))
    return t.result(
        "uniqueness-theorem",
        ("singlet-uniqueness", "epr-chain"),
        SAMPLED_TOL,
        f"singlet phase-distance under V(x)V over {n_samples} Haar V; {n_states} states orthogonal to the "
        f"singlet each moved by more than 1e-3 for some of {n_rotations} V (min of max = {worst:.6g}); "
        "EPR chain in 123, 321, 231 with and without V",
    )


def _counterexample_panel():
    paulis = _paulis()
    names = list(paulis)
    for l_left, l_right in ((T123, T321), (T123, T213), (T321, T231)):
        for combo in itertools.product(names, repeat=4):
            yield l_left, l_right, combo, [paulis[n] for n in combo]


def check_tps_laws(rng, n_quadruples: int = 100) -> CheckResult:
    t = _Tally()
    labels = set(ALL_LABELS)
    for outer, inner in itertools.product(ALL_LABELS, repeat=2):
        c = compose(outer, inner)
        t.holds("closure", c in labels)
        t.eq("compose = matrix product", perm_unitary(c), perm_unitary(outer) @ perm_unitary(inner))
    for _ in range(n_quadruples):
        a, b, c, d = (_random_op2(rng) for _ in range(4))
        for l in ALL_LABELS:
            t.eq("conjugation law", tensor_op(l, a, b), conjugate(perm_unitary(l), kron(a, b)))
            t.eq("same-label product", tensor_op(l, a, b) @ tensor_op(l, c, d), tensor_op(l, a @ c, b @ d))
        for l, l2 in itertools.product(ALL_LABELS, repeat=2):
            tmat = perm_unitary(l2) @ perm_unitary(l).conj().T
            t.eq("covariance", tensor_op(l2, a, b), conjugate(tmat, tensor_op(l, a, b)))
    best = 0.0
    best_case = None
    for l_left, l_right, names, ops in _counterexample_panel():
        dfc = mixed_product_defect(l_left, l_right, *ops)
        if dfc > best:
            best, best_case = dfc, (l_left.code, l_right.code, names)
    t.holds("mixed-label counterexample", best > 0.01)
    return t.result(
        "tps-laws",
        ("conjugation-law", "covariance-law", "composition-closure", "same-label-product-law", "mixed-label-counterexample"),
        EXACT_TOL,
        f"36 compositions closed; same-label product law on {n_quadruples} random quadruples; "
        f"largest mixed-label defect {best:.6g} at {best_case}",
    )


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------

def _no_rng(fn):
    @functools.wraps(fn)
    def run(rng):
        return fn()

    return run


DEFAULT_CHECKS = (
    ("permutation-unitaries", _no_rng(check_permutation_unitaries)),
    ("projector-algebra", _no_rng(check_projector_algebra)),
    ("pauli-dictionary", _no_rng(check_pauli_dictionary)),
    ("bell-truth-values", _no_rng(check_bell_truth_values)),
    ("local-basis-change", check_local_basis_change),
    ("singlet-identities", check_singlet_identities),
    ("uniqueness-theorem", check_uniqueness_theorem),
    ("tps-laws", check_tps_laws),
)

IDENTITY_TAGS = {
    "permutation-unitaries": ("color-basis", "tps-basis-relabeling", "permutation-unitary-matrices"),
    "projector-algebra": ("marginal-projectors", "projector-matrix-rows-columns", "six-tps-projector-tables"),
    "pauli-dictionary": (
        "pauli-dictionary-321",
        "left-bit-eigenvectors-321",
        "left-negation-321",
        "entangled-product-duality",
        "alice-bob-swap-213",
        "iff-bit-231",
    ),
    "bell-truth-values": ("bell-truth-values-321",),
    "local-basis-change": ("local-basis-change-123", "local-basis-change-any-tps", "local-change-not-tps-change"),
    "singlet-identities": (
        "singlet-product-form-321",
        "singlet-invariance-forms",
        "singlet-v-rotated-eigen",
        "singlet-rotated-eigen-relations",
        "singlet-factorizations-321-231",
    ),
    "uniqueness-theorem": ("singlet-uniqueness", "epr-chain"),
    "tps-laws": (
        "conjugation-law",
        "covariance-law",
        "composition-closure",
        "same-label-product-law",
        "mixed-label-counterexample",
    ),
}


@dataclass(frozen=True)
class VerificationReport:
    results: tuple[CheckResult, ...]
    seed: int
    timestamp: str = ""

    @property
    def n_passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def n_failed(self) -> int:
        return len(self.results) - self.n_passed

    @property
    def all_passed(self) -> bool:
        return self.n_failed == 0

    def to_dict(self) -> dict:
        return {
            "tool": "tpsqubits",
            "version": __version__,
            "seed": self.seed,
            "timestamp": self.timestamp,
            "tolerances": {"exact": EXACT_TOL, "sampled": SAMPLED_TOL},
            "summary": {"total": len(self.results), "passed": self.n_passed, "failed": self.n_failed},
            "checks": [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"tpsqubits {__version__} verification, seed {self.seed}"]
        for r in self.results:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"  [{mark}] {r.check_id:<22} max_dev={r.max_deviation:.3e}  tol={r.tolerance:.0e}")
            lines.append(f"         {r.details}")
        lines.append(f"{self.n_passed}/{len(self.results)} checks passed")
        return "\n".join(lines) + "\n"


def check_rng(seed: int, check_id: str) -> np.random.Generator:
    """Generator for one check, keyed by its id so results do not depend on run order."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(zlib.crc32(check_id.encode()),)))


def run_all(seed: int = 0, checks=DEFAULT_CHECKS, timestamp: str | None = None) -> VerificationReport:
    """Run every check in declared order and collect the results."""
    results = [fn(check_rng(seed, check_id)) for check_id, fn in checks]
    if timestamp is None:
        timestamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    return VerificationReport(tuple(results), int(seed), timestamp)
