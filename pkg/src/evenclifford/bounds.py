"""Dimension bounds and the gap inequality, by rank class.

Pure integer/rational arithmetic: the upper bound d_max on the dimension
of the automorphism group, the gap threshold d_max - C(r,2), the parity
and size constraints under which the gap statement applies, the
centralizer dimension d_C, and the maximal dimension d_M of a proper
maximal subalgebra of the centralizer (undefined for the unitary rank
classes r = 2, 6 mod 8, which are handled by a separate argument).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .clifford import irrep_info
from .normalizers import expected_dims
from .structures import Multiplicities


def binom2(n: int) -> int:
    """n choose 2, with values below 2 (including negatives) giving 0, so
    zero multiplicities evaluate cleanly."""
    return n * (n - 1) // 2 if n >= 2 else 0


class UndefinedForRankClass(ValueError):
    """Raised when d_M (or the gap inequality) is queried for a rank class
    where it is undefined."""


D_M_UNDEFINED_REASON = "undefined for this rank class (r = 2, 6 mod 8)"


def _prep(r: int, mult) -> Multiplicities:
    if r < 3:
        raise ValueError("bounds require rank >= 3")
    return Multiplicities.coerce(mult, r)


def d_max(r: int, mult) -> int:
    """Upper bound for dim Aut: N + centralizer + C(r,2), in closed form
    per rank class."""
    mult = _prep(r, mult)
    d = irrep_info(r).dim
    k = r % 8
    if k == 0:
        return binom2(mult.m1) + binom2(mult.m2) + binom2(r) + d * mult.total
    if k in (1, 7):
        return binom2(mult.m) + binom2(r) + d * mult.m
    if k in (2, 6):
        return mult.m * mult.m + binom2(r) + d * mult.m
    if k in (3, 5):
        return binom2(2 * mult.m + 1) + binom2(r) + d * mult.m
    # k == 4
    return (
        binom2(2 * mult.m1 + 1)
        + binom2(2 * mult.m2 + 1)
        + binom2(r)
        + d * mult.total
    )


def gap_threshold(r: int, mult) -> int:
    """d_max - C(r,2): below the maximum, dimensions in the open gap
    [threshold, d_max) are excluded under the constraints."""
    return d_max(r, mult) - binom2(r)


def constraints_ok(r: int, mult) -> bool:
    """Size/parity constraints under which the gap statement applies.

    r = 0 mod 8: min(m1, m2) > C(r,2) + 1, both even.
    r = 1, 7:    m > C(r,2) + 1, m even.
    r = 2, 6:    m > C(r,2)/2 + 1/2, m even.
    r = 3, 5:    m > C(r,2)/4 + 1.
    r = 4 mod 8: min(m1, m2) > C(r,2)/4 + 1.

    Strict inequalities; fractional thresholds compared exactly.
    """
    mult = _prep(r, mult)
    c = binom2(r)
    k = r % 8
    if k == 0:
        lo = min(mult.m1, mult.m2)
        return lo > c + 1 and mult.m1 % 2 == 0 and mult.m2 % 2 == 0
    if k in (1, 7):
        return mult.m > c + 1 and mult.m % 2 == 0
    if k in (2, 6):
        return mult.m > Fraction(c, 2) + Fraction(1, 2) and mult.m % 2 == 0
    if k in (3, 5):
        return mult.m > Fraction(c, 4) + 1
    lo = min(mult.m1, mult.m2)
    return lo > Fraction(c, 4) + 1


def d_C(r: int, mult) -> int:
    """Centralizer dimension (same closed form as expected_dims)."""
    _prep(r, mult)
    return expected_dims(r, mult).centralizer


def d_M(r: int, mult) -> int:
    """Maximal dimension of a proper maximal subalgebra of the centralizer.

    r = 0 mod 8: max(C(m1-1,2) + C(m2,2), C(m1,2) + C(m2-1,2)).
    r = 1, 7:    C(m-1,2).
    r = 3, 5:    C(2m-1,2) + 3.
    r = 4 mod 8: max of the two mixed expressions.
    Undefined for r = 2, 6 mod 8 (raises UndefinedForRankClass).
    """
    mult = _prep(r, mult)
    k = r % 8
    if k in (2, 6):
        raise UndefinedForRankClass(D_M_UNDEFINED_REASON)
    if k == 0:
        return max(
            binom2(mult.m1 - 1) + binom2(mult.m2),
            binom2(mult.m1) + binom2(mult.m2 - 1),
        )
    if k in (1, 7):
        return binom2(mult.m - 1)
    if k in (3, 5):
        return binom2(2 * mult.m - 1) + 3
    # k == 4
    return max(
        binom2(2 * mult.m1 - 1) + 3 + binom2(2 * mult.m2 + 1),
        binom2(2 * mult.m1 + 1) + binom2(2 * mult.m2 - 1) + 3,
    )


def gap_inequality_holds(r: int, mult) -> bool:
    """d_C > d_M + C(r,2): the arithmetic core of the gap statement.
    Raises UndefinedForRankClass where d_M is undefined."""
    return d_C(r, mult) > d_M(r, mult) + binom2(r)


# ----------------------------------------------------------------------
# report assembly

@dataclass(frozen=True)
class BoundsReport:
    r: int
    mult: Multiplicities
    N: int
    d_max: int
    d_C: int
    d_M: Optional[int]
    d_M_reason: Optional[str]
    gap_threshold: int
    constraints_ok: bool
    gap_inequality_ok: Optional[bool]

    def to_json_dict(self) -> dict:
        return {
            "rank": self.r,
            "mult": list(self.mult.values),
            "N": self.N,
            "d_max": self.d_max,
            "d_C": self.d_C,
            "d_M": self.d_M,
            "d_M_reason": self.d_M_reason,
            "gap_threshold": self.gap_threshold,
            "constraints_ok": self.constraints_ok,
            "gap_inequality_ok": self.gap_inequality_ok,
        }


def bounds_report(r: int, mult) -> BoundsReport:
    mult = _prep(r, mult)
    n = irrep_info(r).dim * mult.total
    dm = d_max(r, mult)
    thr = gap_threshold(r, mult)
    assert thr == dm - binom2(r)
    try:
        dmval: Optional[int] = d_M(r, mult)
        reason = None
        gap_ok: Optional[bool] = d_C(r, mult) > dmval + binom2(r)
    except UndefinedForRankClass:
        dmval = None
        reason = D_M_UNDEFINED_REASON
        gap_ok = None
    return BoundsReport(
        r=r,
        mult=mult,
        N=n,
        d_max=dm,
        d_C=d_C(r, mult),
        d_M=dmval,
        d_M_reason=reason,
        gap_threshold=thr,
        constraints_ok=constraints_ok(r, mult),
        gap_inequality_ok=gap_ok,
    )
