"""
Channel parameters, interference-regime classification, and exact one-shot
channel evaluation for the interfering-MAC and interfering-BC cells.

Gain convention: the two cells are cell 1 (direct gains n1 >= n2) and
cell 2 (n3 >= n4).  nM is the cross gain in the cell-1-to-cell-2
direction, nD in the cell-2-to-cell-1 direction, in both channel models.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gf2core import BitVector, shift_apply, vec_xor

IMAC = "imac"
IBC = "ibc"

VERY_WEAK_SUB_A = "VeryWeakSubA"
VERY_WEAK_SUB_B = "VeryWeakSubB"
VERY_WEAK_MIXED = "VeryWeakMixed"
OUT_OF_VERY_WEAK = "OutOfVeryWeak"

_PARAM_KEYS = ("n1", "n2", "n3", "n4", "nM", "nD", "q")


@dataclass(frozen=True)
class CellParams:
    """Gains of a two-cell interfering system plus the ambient length q.

    q defaults to the largest gain; any larger q has identical semantics
    because the extra top levels are truncated everywhere.
    """

    n1: int
    n2: int
    n3: int
    n4: int
    nM: int
    nD: int
    q: int | None = None

    def __post_init__(self):
        vals = (self.n1, self.n2, self.n3, self.n4, self.nM, self.nD)
        for v in vals:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"gains must be non-negative integers, got {vals}")
        if self.n1 < self.n2 or self.n3 < self.n4:
            raise ValueError("direct gains must be ordered: n1 >= n2 and n3 >= n4")
        if self.q is None:
            object.__setattr__(self, "q", max(vals))
        if not isinstance(self.q, int) or self.q < max(vals):
            raise ValueError(f"q = {self.q} must be an integer >= max gain {max(vals)}")

    @property
    def delta1(self) -> int:
        return self.n1 - self.n2

    @property
    def delta2(self) -> int:
        return self.n3 - self.n4

    @property
    def alpha(self) -> Fraction | None:
        """Interference-to-signal level ratio nM/n1; None when n1 = 0."""
        if self.n1 == 0:
            return None
        return Fraction(self.nM, self.n1)

    def swapped_cross(self) -> "CellParams":
        """Same cells with the two cross-gain directions exchanged."""
        return CellParams(self.n1, self.n2, self.n3, self.n4,
                          nM=self.nD, nD=self.nM, q=self.q)

    def to_json(self, model: str = IMAC) -> dict:
        if model not in (IMAC, IBC):
            raise ValueError(f"unknown model {model!r}")
        d = {"model": model}
        d.update({k: getattr(self, k) for k in _PARAM_KEYS})
        return d

    @classmethod
    def from_json(cls, obj: dict) -> tuple["CellParams", str]:
        """Parse a params object; returns (params, model). Missing model
        is read as imac."""
        model = obj.get("model", IMAC)
        if model not in (IMAC, IBC):
            raise ValueError(f"unknown model {model!r}")
        try:
            kwargs = {k: obj[k] for k in _PARAM_KEYS if k in obj}
        except TypeError as e:
            raise ValueError(f"malformed params object: {e}")
        missing = [k for k in _PARAM_KEYS[:-1] if k not in kwargs]
        if missing:
            raise ValueError(f"params object missing fields {missing}")
        return cls(**kwargs), model


@dataclass(frozen=True)
class Regime:
    """Interference-regime tag plus the per-cell sub-case flags.

    cell1_below_weak / cell2_below_weak record whether the summed cross
    interference fits under the weak direct gain of the cell (the sub-case
    A condition); both flags true in the very weak range means SubA.
    """

    tag: str
    cell1_below_weak: bool
    cell2_below_weak: bool

    @property
    def very_weak(self) -> bool:
        return self.tag != OUT_OF_VERY_WEAK

    @property
    def sub_a(self) -> bool:
        return self.tag == VERY_WEAK_SUB_A


def classify_regime(p: CellParams) -> Regime:
    """Classify interference strength; boundary equalities resolve to SubA."""
    s = p.nM + p.nD
    c1 = s <= p.n2
    c2 = s <= p.n4
    if s > min(p.n1, p.n3):
        tag = OUT_OF_VERY_WEAK
    elif c1 and c2:
        tag = VERY_WEAK_SUB_A
    elif not c1 and not c2:
        tag = VERY_WEAK_SUB_B
    else:
        tag = VERY_WEAK_MIXED
    return Regime(tag, c1, c2)


def imac_output(p: CellParams, x1: BitVector, x2: BitVector,
                x3: BitVector, x4: BitVector) -> tuple[BitVector, BitVector]:
    """One-shot interfering-MAC channel: four transmit vectors in, the two
    cell receivers' observations out.  Superposition is levelwise XOR."""
    q = p.q
    y1 = vec_xor(shift_apply(q, p.n1, x1), shift_apply(q, p.n2, x2),
                 shift_apply(q, p.nD, x3), shift_apply(q, p.nD, x4))
    y2 = vec_xor(shift_apply(q, p.nM, x1), shift_apply(q, p.nM, x2),
                 shift_apply(q, p.n3, x3), shift_apply(q, p.n4, x4))
    return y1, y2


def ibc_output(p: CellParams, x1: BitVector, x2: BitVector
               ) -> tuple[BitVector, BitVector, BitVector, BitVector]:
    """One-shot interfering-BC channel: two transmit vectors in, the four
    receivers' observations out."""
    q = p.q
    y1 = vec_xor(shift_apply(q, p.n1, x1), shift_apply(q, p.nD, x2))
    y2 = vec_xor(shift_apply(q, p.n2, x1), shift_apply(q, p.nD, x2))
    y3 = vec_xor(shift_apply(q, p.n3, x2), shift_apply(q, p.nM, x1))
    y4 = vec_xor(shift_apply(q, p.n4, x2), shift_apply(q, p.nM, x1))
    return y1, y2, y3, y4
