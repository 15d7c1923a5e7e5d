"""
Closed-form achievable sum rates and converse bounds, plus the symmetric
w-curve sweep.  All rates are exact rationals; bounds can be half-integers
and the k-transmitter bound has denominator k.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .channel import CellParams, classify_regime, VERY_WEAK_SUB_A
from .errors import RegimeError

Q = Fraction  # rational type alias


def floor_ratio(p: int, q: int) -> int:
    """floor(p/q) extended with floor_ratio(p, 0) = 0."""
    if p < 0 or q < 0:
        raise ValueError("arguments must be non-negative")
    return 0 if q == 0 else p // q


def phi(p: int, q: int) -> int:
    """Net bit-level yield of a width-p window under a relative shift q.

    With l = floor_ratio(p, q):
      l even -> q + l*q/2
      l odd  -> p - (l-1)*q/2
    Always an integer: both branches subtract or add q times an even
    count over 2.
    """
    if p < 0 or q < 0:
        raise ValueError("arguments must be non-negative")
    l = floor_ratio(p, q)
    if l % 2 == 0:
        return q + l * q // 2
    return p - (l - 1) * q // 2


def achievable_sum(p: CellParams, force: bool = False) -> Q:
    """Alignment-scheme sum rate n2 + n4 - nM - nD + phi(nM, d1) + phi(nD, d2).

    Valid (achievable) only in the SubA regime; outside it the value is
    computed only under force=True and is a formula evaluation, not an
    achievability claim.
    """
    r = classify_regime(p)
    if not r.sub_a and not force:
        raise RegimeError(
            f"achievable formula requires {VERY_WEAK_SUB_A}, got {r.tag} "
            f"(pass force=True for a formula-only value)")
    val = p.n2 + p.n4 - p.nM - p.nD + phi(p.nM, p.delta1) + phi(p.nD, p.delta2)
    return Q(val)


def subsystem_rates(p: CellParams, force: bool = False) -> tuple[Q, Q]:
    """The two subsystem contributions; they sum to achievable_sum."""
    r = classify_regime(p)
    if not r.sub_a and not force:
        raise RegimeError(
            f"subsystem split requires {VERY_WEAK_SUB_A}, got {r.tag}")
    zeta1 = p.n2 - p.nM - p.nD
    zeta2 = p.n4 - p.nM - p.nD
    r1 = p.nM + zeta1 + phi(p.nM, p.delta1)
    r2 = p.nD + zeta2 + phi(p.nD, p.delta2)
    return Q(r1), Q(r2)


def upper_bound_sum(p: CellParams) -> Q:
    """Converse sum-rate bound n1 + n3 - nM/2 - nD/2 (very weak regime).

    The same expression bounds both the MAC-side and the BC-side system.
    """
    r = classify_regime(p)
    if not r.very_weak:
        raise RegimeError(f"sum-rate bound requires the very weak regime, got {r.tag}")
    return p.n1 + p.n3 - Q(p.nM, 2) - Q(p.nD, 2)


def upper_bound_ktx(p: CellParams, k: int) -> Q:
    """k-transmitter-per-cell converse bound; reduces to n1+n3-(nM+nD)/k.

    At k = 2 this equals upper_bound_sum exactly.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"transmitter count k must be a positive integer, got {k}")
    r = classify_regime(p)
    if not r.very_weak:
        raise RegimeError(f"k-transmitter bound requires the very weak regime, got {r.tag}")
    return p.n1 - p.nD + p.n3 - p.nM + Q((k - 1) * p.nD, k) + Q((k - 1) * p.nM, k)


@dataclass(frozen=True)
class WCurvePoint:
    """One point of a symmetric sweep: n3 = n1, n2 = n4 = n1 - delta,
    nM = nD = ni.  achievable and gap are None outside SubA, where the
    alignment formula makes no claim."""

    alpha: Q
    ni: int
    achievable: Q | None
    bound: Q
    gap: Q | None
    regime: str

    @property
    def bound_per_cell(self) -> Q:
        return self.bound / 2

    @property
    def achievable_per_cell(self) -> Q | None:
        return None if self.achievable is None else self.achievable / 2

    def bound_per_link(self, n1: int) -> Q:
        return self.bound / (2 * n1)

    def achievable_per_link(self, n1: int) -> Q | None:
        return None if self.achievable is None else self.achievable / (2 * n1)


WCURVE_CSV_HEADER = "alpha_num,alpha_den,ni,achievable,bound_num,bound_den,gap_num,gap_den,regime"


def wcurve_sweep(n1: int, delta: int, alphas: list[Q] | None = None) -> list[WCurvePoint]:
    """Sweep interference strength for the symmetric system.

    Each alpha must yield an integer ni = alpha * n1; non-integer points
    are skipped with a warning.  Default alphas cover every integer ni
    in the very weak range 0 <= ni <= n1/2.
    """
    if delta < 0 or n1 < delta:
        raise ValueError("need n1 >= delta >= 0")
    if alphas is None:
        if n1 == 0:
            alphas = [Q(0)]
        else:
            alphas = [Q(ni, n1) for ni in range(n1 // 2 + 1)]
    points = []
    for a in alphas:
        ni_exact = a * n1
        if ni_exact.denominator != 1:
            warnings.warn(f"skipped alpha {a}: ni = {ni_exact} is not an integer")
            continue
        ni = int(ni_exact)
        p = CellParams(n1, n1 - delta, n1, n1 - delta, nM=ni, nD=ni)
        regime = classify_regime(p)
        tag = regime.tag
        if delta == 0:
            tag += "+no-shift"  # alignment needs a nonzero shift
        bound = upper_bound_sum(p)
        if regime.sub_a:
            ach = achievable_sum(p)
            gap = bound - ach
        else:
            ach = None
            gap = None
        points.append(WCurvePoint(a, ni, ach, bound, gap, tag))
    return points


def wcurve_csv(points: list[WCurvePoint]) -> str:
    """Render sweep points as CSV text (fixed header, exact rationals)."""
    lines = [WCURVE_CSV_HEADER]
    for pt in points:
        ach = "" if pt.achievable is None else str(int(pt.achievable))
        gn = "" if pt.gap is None else str(pt.gap.numerator)
        gd = "" if pt.gap is None else str(pt.gap.denominator)
        lines.append(",".join([
            str(pt.alpha.numerator), str(pt.alpha.denominator), str(pt.ni),
            ach, str(pt.bound.numerator), str(pt.bound.denominator),
            gn, gd, pt.regime,
        ]))
    return "\n".join(lines) + "\n"
