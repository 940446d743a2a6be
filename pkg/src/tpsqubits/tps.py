"""The six tensor product structures on C^4.

Each structure is named by a permutation (a, b, c) of (1, 2, 3). Its
permutation unitary sends reference index 0 -> 0, 1 -> a, 2 -> b, 3 -> c,
and the structure's product is ``A (x)_abc B = U_abc (A (x) B) U_abc^dagger``.
Everything here is exact: the unitaries are 0/1 matrices.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

import numpy as np

from .linalg import I2, P0, P1, conjugate, kron


class TpsLabel(enum.Enum):
    T123 = (1, 2, 3)
    T132 = (1, 3, 2)
    T213 = (2, 1, 3)
    T231 = (2, 3, 1)
    T312 = (3, 1, 2)
    T321 = (3, 2, 1)

    @property
    def perm(self) -> tuple[int, int, int]:
        return self.value

    @property
    def code(self) -> str:
        return "".join(str(i) for i in self.value)

    @classmethod
    def parse(cls, text) -> "TpsLabel":
        """Accept ``"321"``, ``321``, ``(3, 2, 1)`` or an existing label."""
        if isinstance(text, cls):
            return text
        if isinstance(text, (tuple, list)):
            key = tuple(int(i) for i in text)
        else:
            s = str(text).strip()
            if len(s) != 3 or not s.isdigit():
                raise ValueError(f"invalid TPS label {text!r}: must be one of {', '.join(l.code for l in cls)}")
            key = tuple(int(ch) for ch in s)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(
                f"invalid TPS label {text!r}: must be one of {', '.join(l.code for l in cls)}"
            ) from None

    def __str__(self) -> str:
        return self.code


ALL_LABELS: tuple[TpsLabel, ...] = tuple(TpsLabel)


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


# Transcribed 0/1 matrices, rows k, columns l: (U)_kl = <k|U|l>.
_DISPLAYED = {
    TpsLabel.T123: ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    TpsLabel.T321: ((1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0)),
    TpsLabel.T213: ((1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1)),
    TpsLabel.T231: ((1, 0, 0, 0), (0, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0)),
    TpsLabel.T312: ((1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (0, 1, 0, 0)),
    TpsLabel.T132: ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0)),
}


def index_map(label: TpsLabel) -> tuple[int, int, int, int]:
    """Images of reference indices 0..3 under the label's permutation."""
    return (0, *TpsLabel.parse(label).perm)


def perm_unitary_from_definition(label: TpsLabel) -> np.ndarray:
    u = np.zeros((4, 4), dtype=np.complex128)
    for col, row in enumerate(index_map(label)):
        u[row, col] = 1.0
    return u


def displayed_perm_unitary(label: TpsLabel) -> np.ndarray:
    return np.array(_DISPLAYED[TpsLabel.parse(label)], dtype=np.complex128)


def check_transcription() -> float:
    """Largest entry difference between transcribed and regenerated unitaries."""
    return max(
        float(np.max(np.abs(displayed_perm_unitary(l) - perm_unitary_from_definition(l))))
        for l in ALL_LABELS
    )


_UNITARIES = {l: perm_unitary_from_definition(l) for l in ALL_LABELS}
for _u in _UNITARIES.values():
    _u.setflags(write=False)


def perm_unitary(label) -> np.ndarray:
    return _UNITARIES[TpsLabel.parse(label)]


def tensor_op(label, a, b) -> np.ndarray:
    """``a (x)_label b``."""
    return conjugate(perm_unitary(label), kron(a, b))


def tensor_ket(label, x, y) -> np.ndarray:
    """``|x> (x)_label |y>`` for 2-component kets ``x`` and ``y``."""
    return perm_unitary(label) @ np.kron(np.asarray(x, dtype=np.complex128), np.asarray(y, dtype=np.complex128))


def basis_ket(label, r: int, s: int) -> np.ndarray:
    """``|rs_label> = U_label |2r+s>``."""
    if r not in (0, 1) or s not in (0, 1):
        raise ValueError("basis_ket bits must be 0 or 1")
    return perm_unitary(label)[:, 2 * r + s].copy()


def compose(outer, inner) -> TpsLabel:
    """Label whose unitary is ``U_outer @ U_inner``."""
    o = index_map(outer)
    i = index_map(inner)
    return TpsLabel(tuple(o[i[k]] for k in (1, 2, 3)))


def inverse(label) -> TpsLabel:
    m = index_map(label)
    inv = [0] * 4
    for k, v in enumerate(m):
        inv[v] = k
    return TpsLabel(tuple(inv[1:]))


# ---------------------------------------------------------------------------
# subsystem projectors and their readings relative to (x)_123
# ---------------------------------------------------------------------------

COLORS = ("C", "M", "Y", "G")

# projector "bit = 0" for each of the three reference questions, as index sets
_READINGS = {
    frozenset({0, 1}): ("0 of Alice", "1 of Alice"),
    frozenset({0, 2}): ("0 of Bob", "1 of Bob"),
    frozenset({0, 3}): ("Alice IFF Bob", "Alice XOR Bob"),
}

PROPOSITION_TEXTS = tuple(t for pair in _READINGS.values() for t in pair)


@dataclass(frozen=True)
class Proposition:
    label: TpsLabel
    side: Side
    bit: int
    text: str
    indices: tuple[int, int]
    projector: np.ndarray = field(repr=False, compare=False)

    @property
    def colors(self) -> tuple[str, str]:
        return tuple(COLORS[i] for i in self.indices)

    def color_sum(self) -> str:
        return " + ".join(f"P_{c}" for c in self.colors)


def projector_indices(label, side: Side, bit: int) -> tuple[int, int]:
    """Reference indices spanned by the label's ``side`` bit equal to ``bit``."""
    m = index_map(label)
    if side is Side.LEFT:
        ks = (2 * bit, 2 * bit + 1)
    else:
        ks = (bit, 2 + bit)
    return tuple(sorted(m[k] for k in ks))


def subsystem_projector(label, side: Side, bit: int) -> Proposition:
    """``P_bit (x)_label I`` (left) or ``I (x)_label P_bit`` (right).

    Built as the sum of ``|rs_label><rs_label|`` over the other bit.
    """
    label = TpsLabel.parse(label)
    side = Side(side)
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    proj = np.zeros((4, 4), dtype=np.complex128)
    for other in (0, 1):
        r, s = (bit, other) if side is Side.LEFT else (other, bit)
        k = basis_ket(label, r, s)
        proj += np.outer(k, k.conj())
    idx = projector_indices(label, side, bit)
    zero_set = frozenset(projector_indices(label, side, 0))
    text = _READINGS[zero_set][bit]
    proj.setflags(write=False)
    return Proposition(label, side, bit, text, idx, proj)


def subsystem_projector_kron(label, side: Side, bit: int) -> np.ndarray:
    """Same projector via the conjugation law, from ``P_bit (x) I`` or ``I (x) P_bit``."""
    p = P0 if bit == 0 else P1
    if Side(side) is Side.LEFT:
        return tensor_op(label, p, I2)
    return tensor_op(label, I2, p)


def all_propositions() -> list[Proposition]:
    return [
        subsystem_projector(l, side, bit)
        for l in ALL_LABELS
        for side in (Side.LEFT, Side.RIGHT)
        for bit in (0, 1)
    ]


# Color sums of the four subsystem projectors, in order
# (P_0 (x) I, P_1 (x) I, I (x) P_0, I (x) P_1).
COLOR_SUM_TABLE = {
    TpsLabel.T123: (("C", "M"), ("Y", "G"), ("C", "Y"), ("M", "G")),
    TpsLabel.T321: (("C", "G"), ("M", "Y"), ("C", "Y"), ("M", "G")),
    TpsLabel.T213: (("C", "Y"), ("M", "G"), ("C", "M"), ("Y", "G")),
    TpsLabel.T231: (("C", "Y"), ("M", "G"), ("C", "G"), ("M", "Y")),
    TpsLabel.T312: (("C", "G"), ("M", "Y"), ("C", "M"), ("Y", "G")),
    TpsLabel.T132: (("C", "M"), ("Y", "G"), ("C", "G"), ("M", "Y")),
}


def color_sum_projector(colors) -> np.ndarray:
    p = np.zeros((4, 4), dtype=np.complex128)
    for c in colors:
        i = COLORS.index(c)
        p[i, i] = 1.0
    return p


def mixed_product_defect(label_left, label_right, a, b, c, d) -> float:
    """min over L'' of ||(a (x)_L b)(c (x)_R d) - (ac) (x)_L'' (bd)||_F."""
    lhs = tensor_op(label_left, a, b) @ tensor_op(label_right, c, d)
    ac = np.asarray(a, dtype=np.complex128) @ np.asarray(c, dtype=np.complex128)
    bd = np.asarray(b, dtype=np.complex128) @ np.asarray(d, dtype=np.complex128)
    return min(float(np.linalg.norm(lhs - tensor_op(l, ac, bd))) for l in ALL_LABELS)


def label_pairs():
    return itertools.product(ALL_LABELS, repeat=2)
