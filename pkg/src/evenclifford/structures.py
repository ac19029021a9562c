"""Even-Clifford hermitian structures on R^N.

Assembles full structures from irreducible blocks and multiplicities
(J_ij = K_ij tensor I_m, or a block-diagonal pair of halves when the rank
is divisible by 4), verifies the defining identities against the symbolic
oracle, and provides the rank-4 decomposition into two commuting
quaternionic triples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import clifford
from .linalg import (
    Matrix,
    as_signed_permutation,
    blockdiag,
    commutator,
    so_coordinates,
    submatrix,
    vectors_rank,
)


@dataclass(frozen=True)
class Multiplicities:
    """Multiplicity data: a single m >= 1, or a pair (m1, m2) >= 0 (not
    both zero) for ranks divisible by 4, where two half representations
    exist."""

    values: Tuple[int, ...]

    def __post_init__(self):
        if len(self.values) == 1:
            if self.values[0] < 1:
                raise ValueError("single multiplicity must be >= 1")
        elif len(self.values) == 2:
            m1, m2 = self.values
            if m1 < 0 or m2 < 0 or (m1 == 0 and m2 == 0):
                raise ValueError("split multiplicities must be >= 0 and not both zero")
        else:
            raise ValueError("multiplicities are a single value or a pair")

    @staticmethod
    def single(m: int) -> "Multiplicities":
        return Multiplicities((m,))

    @staticmethod
    def split(m1: int, m2: int) -> "Multiplicities":
        return Multiplicities((m1, m2))

    @staticmethod
    def parse(text: str) -> "Multiplicities":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) == 1:
            return Multiplicities.single(int(parts[0]))
        if len(parts) == 2:
            return Multiplicities.split(int(parts[0]), int(parts[1]))
        raise ValueError(f"cannot parse multiplicities from {text!r}")

    @staticmethod
    def coerce(value, r: Optional[int] = None) -> "Multiplicities":
        if isinstance(value, Multiplicities):
            mult = value
        elif isinstance(value, int):
            mult = Multiplicities.single(value)
        elif isinstance(value, str):
            mult = Multiplicities.parse(value)
        elif isinstance(value, (tuple, list)):
            if len(value) == 1:
                mult = Multiplicities.single(value[0])
            else:
                mult = Multiplicities.split(*value)
        else:
            raise TypeError(f"cannot interpret {value!r} as multiplicities")
        if r is not None:
            mult.validate_for_rank(r)
        return mult

    def validate_for_rank(self, r: int) -> None:
        if (r % 4 == 0) != self.is_split:
            if r % 4 == 0:
                raise ValueError(
                    f"rank {r} is divisible by 4 and has two half representations; "
                    f"give a multiplicity pair m1,m2"
                )
            raise ValueError(
                f"rank {r} is not divisible by 4 and has a single irreducible "
                f"representation; give one multiplicity m"
            )

    @property
    def is_split(self) -> bool:
        return len(self.values) == 2

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def m(self) -> int:
        if self.is_split:
            raise ValueError("split multiplicities have no single m")
        return self.values[0]

    @property
    def m1(self) -> int:
        if not self.is_split:
            raise ValueError("single multiplicity has no m1")
        return self.values[0]

    @property
    def m2(self) -> int:
        return self.values[1]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


@dataclass
class EvenCliffordStructure:
    """A rank-r even-Clifford hermitian structure on R^N: antisymmetric
    J_ij with J_ij^2 = -I realizing the bivector bracket table."""

    r: int
    mult: Multiplicities
    N: int
    J: Dict[Tuple[int, int], Matrix]
    dim_irrep: int
    _signed: Dict[Tuple[int, int], Tuple[List[int], List[int]]] = field(
        default_factory=dict, repr=False, compare=False
    )

    def j(self, i: int, k: int) -> Matrix:
        """J_ik for any i != k, with J_ki = -J_ik."""
        if i == k:
            raise ValueError("bivector needs distinct indices")
        if i < k:
            return self.J[(i, k)]
        return -self.J[(k, i)]

    def pairs(self) -> List[Tuple[int, int]]:
        return sorted(self.J)

    def signed_form(self, pair: Tuple[int, int]) -> Tuple[List[int], List[int]]:
        """(perm, signs) decomposition of J_pair, cached."""
        if pair not in self._signed:
            self._signed[pair] = as_signed_permutation(self.J[pair])
        return self._signed[pair]

    @property
    def single_half_rank4(self) -> bool:
        """True for the degenerate rank-4 case with only one half present,
        where the bivector images span a 3-dimensional algebra."""
        return self.r == 4 and self.mult.is_split and 0 in self.mult.values

    def expected_span_dim(self) -> int:
        if self.single_half_rank4:
            return 3
        return self.r * (self.r - 1) // 2

    def block_ranges(self) -> List[Tuple[int, int]]:
        """Coordinate ranges of the plus and minus half blocks (split
        ranks only; empty blocks included)."""
        if not self.mult.is_split:
            raise ValueError("blocks exist only for split ranks")
        cut = self.dim_irrep * self.mult.m1
        return [(0, cut), (cut, self.N)]


def build(r: int, mult, max_rank: int = clifford.DEFAULT_MAX_RANK) -> EvenCliffordStructure:
    """Assemble the structure with the given rank and multiplicities.

    For single-irrep ranks, J_ij = K_ij tensor I_m.  For ranks divisible
    by 4, J_ij = blockdiag(K+_ij tensor I_m1, K-_ij tensor I_m2); the
    Clifford factor always varies slowest and the plus block comes first.
    """
    mult = Multiplicities.coerce(mult, r)
    gammas = clifford.build_even_generators(r, max_rank=max_rank)
    table: Dict[Tuple[int, int], Matrix] = {}
    if mult.is_split:
        plus, minus = gammas
        d = plus.dim
        eye1 = Matrix.identity(mult.m1) if mult.m1 else None
        eye2 = Matrix.identity(mult.m2) if mult.m2 else None
        for pair in plus.pairs():
            blocks = []
            if eye1 is not None:
                blocks.append(plus.generators[pair].kron(eye1))
            if eye2 is not None:
                blocks.append(minus.generators[pair].kron(eye2))
            table[pair] = blockdiag(blocks)
        n = d * mult.total
    else:
        g = gammas
        d = g.dim
        eye = Matrix.identity(mult.m)
        for pair in g.pairs():
            table[pair] = g.generators[pair].kron(eye)
        n = d * mult.m
    return EvenCliffordStructure(r=r, mult=mult, N=n, J=table, dim_irrep=d)


# ----------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    r: int
    mult: Multiplicities
    N: int
    mode: str
    checks: Tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "rank": self.r,
            "mult": list(self.mult.values),
            "N": self.N,
            "mode": self.mode,
            "all_passed": self.all_passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def verify(s: EvenCliffordStructure) -> VerifyReport:
    """Check the defining identities of a structure, in exact arithmetic:
    antisymmetry, squares equal to -I, the full bracket table against the
    symbolic oracle, and the dimension of the span of the J_ij.
    Failures are reported, not raised."""
    checks: List[CheckResult] = []
    pairs = s.pairs()

    bad = [p for p in pairs if not s.J[p].is_antisymmetric()]
    checks.append(
        CheckResult(
            "antisymmetry",
            not bad,
            "" if not bad else f"J{bad[0]} is not antisymmetric",
        )
    )

    neg_id = -Matrix.identity(s.N)
    bad = [p for p in pairs if (s.J[p] @ s.J[p]) != neg_id]
    checks.append(
        CheckResult(
            "square",
            not bad,
            "" if not bad else f"J{bad[0]}^2 != -I",
        )
    )

    ok = True
    detail = ""
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            p, q = pairs[a], pairs[b]
            expected = Matrix.zeros(s.N, s.N)
            for (k, l), coeff in clifford.bivector_bracket(p, q, s.r).items():
                expected = expected + s.J[(k, l)].scale(coeff)
            if commutator(s.J[p], s.J[q]) != expected:
                ok = False
                detail = f"[J{p}, J{q}] disagrees with the symbolic bracket"
                break
        if not ok:
            break
    checks.append(CheckResult("brackets", ok, detail))

    span = vectors_rank(
        (so_coordinates(s.J[p]) for p in pairs), s.N * (s.N - 1) // 2
    )
    want = s.expected_span_dim()
    note = ""
    if s.single_half_rank4:
        note = "expected 3: a lone rank-4 half carries a 3-dimensional image"
    checks.append(
        CheckResult(
            "span_dimension",
            span == want,
            note if span == want else f"span dim {span}, expected {want}",
        )
    )

    return VerifyReport(r=s.r, mult=s.mult, N=s.N, mode="exact", checks=tuple(checks))


# ----------------------------------------------------------------------
# rank-4 quaternionic split

@dataclass(frozen=True)
class R4Split:
    """The two quaternionic triples of a rank-4 structure with both halves
    present.  Each triple vanishes identically on one half block and
    restricts to a quaternionic triple (squares -identity) on the other."""

    j_plus: Tuple[Matrix, Matrix, Matrix]
    j_minus: Tuple[Matrix, Matrix, Matrix]
    plus_block: Tuple[int, int]
    minus_block: Tuple[int, int]


def r4_quaternionic_split(s: EvenCliffordStructure) -> R4Split:
    """Split a rank-4 structure into the triples

        J12+- = +-1/2 (J14 +- J23),
        J31+- = +-1/2 (J13 -+ J24),
        J23+- = +-1/2 (J12 +- J34).

    Requires r = 4 with both multiplicities positive."""
    if s.r != 4:
        raise ValueError("quaternionic split is a rank-4 operation")
    if not s.mult.is_split or s.mult.m1 == 0 or s.mult.m2 == 0:
        raise ValueError("both half multiplicities must be positive")
    half = Fraction(1, 2)
    j = s.j
    plus = (
        (j(1, 4) + j(2, 3)).scale(half),
        (j(1, 3) - j(2, 4)).scale(half),
        (j(1, 2) + j(3, 4)).scale(half),
    )
    minus = (
        (j(1, 4) - j(2, 3)).scale(-half),
        (j(1, 3) + j(2, 4)).scale(-half),
        (j(1, 2) - j(3, 4)).scale(-half),
    )
    blocks = s.block_ranges()
    return R4Split(
        j_plus=plus, j_minus=minus, plus_block=blocks[0], minus_block=blocks[1]
    )


def restrict_to_block(m: Matrix, block: Tuple[int, int]) -> Matrix:
    lo, hi = block
    return submatrix(m, range(lo, hi), range(lo, hi))


def vanishes_on_block(m: Matrix, block: Tuple[int, int]) -> bool:
    """True when every row and column touching the block is zero."""
    lo, hi = block
    for i in range(m.nrows):
        for j, v in m.row_items(i):
            if lo <= i < hi or lo <= j < hi:
                if v != 0:
                    return False
    return True


# ----------------------------------------------------------------------
# serialization

def _entry_json(v: Fraction):
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def structure_to_json_dict(s: EvenCliffordStructure) -> dict:
    triplets = []
    for (i, k) in s.pairs():
        mat = s.J[(i, k)]
        for row in range(mat.nrows):
            for col, v in mat.row_items(row):
                triplets.append([i, k, row, col, _entry_json(v)])
    return {
        "r": s.r,
        "mult": list(s.mult.values),
        "N": s.N,
        "J": triplets,
    }


def structure_from_json_dict(data: dict) -> EvenCliffordStructure:
    r = data["r"]
    mult = Multiplicities.coerce(data["mult"], r)
    n = data["N"]
    entries: Dict[Tuple[int, int], List[Tuple[int, int, Fraction]]] = {}
    for i, k, row, col, value in data["J"]:
        entries.setdefault((i, k), []).append((row, col, Fraction(value)))
    table = {
        pair: Matrix.from_entries(n, n, triplets)
        for pair, triplets in entries.items()
    }
    d = irrep_dim = clifford.irrep_info(r).dim
    return EvenCliffordStructure(r=r, mult=mult, N=n, J=table, dim_irrep=d)
