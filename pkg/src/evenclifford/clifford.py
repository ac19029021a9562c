"""Irreducible real representations of even Clifford algebras.

Builds, for each rank r >= 2, the images K_ij of the bivectors e_i e_j
under an irreducible real representation of the even Clifford algebra
Cl0_r, as exact signed-permutation matrices.  A symbolic monomial oracle
(`clifford_product`) provides an independent check of every bracket
identity, and `schur_check` certifies irreducibility and the field type
(real / complex / quaternionic) by computing the commutant dimension.

Construction route: Cl0_r is generated by the products e_i e_r, which
behave like the generators of a rank r-1 Clifford algebra with negative
squares.  A set G_1..G_{r-1} of pairwise anticommuting antisymmetric
matrices with G_i^2 = -I therefore yields K_ir = G_i and K_ij = G_i G_j
for i < j < r.  The G_i themselves are found by a deterministic
backtracking search over tensor monomials of four 2x2 signed-permutation
letters, with the classical period-8 doubling used above rank 8.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .linalg import Matrix, as_signed_permutation

HALF_PLUS = "plus"
HALF_MINUS = "minus"

FIELD_REAL = "real"
FIELD_COMPLEX = "complex"
FIELD_QUATERNIONIC = "quaternionic"

_COMMUTANT_DIM = {FIELD_REAL: 1, FIELD_COMPLEX: 2, FIELD_QUATERNIONIC: 4}

DEFAULT_MAX_RANK = 16


# ----------------------------------------------------------------------
# dimension bookkeeping

@dataclass(frozen=True)
class IrrepInfo:
    """Dimension data of the irreducible real representations of Cl0_r."""

    r: int
    dim: int
    num_irreps: int
    field_type: str

    @property
    def commutant_dim(self) -> int:
        return _COMMUTANT_DIM[self.field_type]


def irrep_info(r: int) -> IrrepInfo:
    """Irrep dimension d_r, count of distinct irreps, and field type.

    The closed forms follow the rank mod 8 pattern: d_r = 2^floor(r/2)
    for r = 1,7; 2^(r/2) for r = 2,4,6; 2^(floor(r/2)+1) for r = 3,5;
    and 2^(r/2-1) for r = 0 (all mod 8).  Two inequivalent irreps exist
    exactly when r = 0 mod 4.
    """
    if r < 2:
        raise ValueError(f"rank must be >= 2, got {r}")
    k = r % 8
    if k in (1, 7):
        dim = 2 ** (r // 2)
    elif k in (2, 4, 6):
        dim = 2 ** (r // 2)
    elif k in (3, 5):
        dim = 2 ** (r // 2 + 1)
    else:  # k == 0
        dim = 2 ** (r // 2 - 1)
    num = 2 if r % 4 == 0 else 1
    if k in (0, 1, 7):
        field = FIELD_REAL
    elif k in (2, 6):
        field = FIELD_COMPLEX
    else:
        field = FIELD_QUATERNIONIC
    return IrrepInfo(r=r, dim=dim, num_irreps=num, field_type=field)


# ----------------------------------------------------------------------
# symbolic oracle

@dataclass(frozen=True)
class CliffordMonomial:
    """A signed product of distinct generators, indices sorted ascending."""

    indices: Tuple[int, ...]
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")
        if list(self.indices) != sorted(set(self.indices)):
            raise ValueError("indices must be strictly increasing")

    def __str__(self) -> str:
        head = "-" if self.sign < 0 else ""
        if not self.indices:
            return head + "1"
        return head + "".join(f"e{i}" for i in self.indices)


def clifford_product(a: CliffordMonomial, b: CliffordMonomial, r: int) -> CliffordMonomial:
    """Product of two monomials in the rank-r Clifford algebra with
    e_i e_j = -e_j e_i (i != j) and e_i^2 = -1.

    Computed purely by transposition counting and square cancellation;
    this is the independent oracle against which all matrix bracket
    identities are checked.
    """
    for idx in itertools.chain(a.indices, b.indices):
        if not 1 <= idx <= r:
            raise ValueError(f"generator index {idx} outside 1..{r}")
    sign = a.sign * b.sign
    seq = list(a.indices)
    for x in b.indices:
        pos = len(seq)
        while pos > 0 and seq[pos - 1] > x:
            pos -= 1
        if (len(seq) - pos) % 2:
            sign = -sign
        if pos > 0 and seq[pos - 1] == x:
            del seq[pos - 1]
            sign = -sign
        else:
            seq.insert(pos, x)
    return CliffordMonomial(tuple(seq), sign)


def bivector(i: int, j: int) -> CliffordMonomial:
    if i == j:
        raise ValueError("bivector needs distinct indices")
    if i < j:
        return CliffordMonomial((i, j), 1)
    return CliffordMonomial((j, i), -1)


def bivector_bracket(p: Tuple[int, int], q: Tuple[int, int], r: int) -> Dict[Tuple[int, int], int]:
    """The bracket [e_p, e_q] of two bivectors expanded in the bivector
    basis, via the symbolic oracle.  Degree-0 and degree-4 terms cancel
    identically; the result maps pairs (k, l), k < l, to integer
    coefficients."""
    ab = clifford_product(bivector(*p), bivector(*q), r)
    ba = clifford_product(bivector(*q), bivector(*p), r)
    terms: Dict[Tuple[int, ...], int] = {}
    terms[ab.indices] = terms.get(ab.indices, 0) + ab.sign
    terms[ba.indices] = terms.get(ba.indices, 0) - ba.sign
    out: Dict[Tuple[int, int], int] = {}
    for indices, coeff in terms.items():
        if coeff == 0:
            continue
        if len(indices) != 2:
            raise AssertionError(
                f"bracket of bivectors produced a degree-{len(indices)} term"
            )
        out[indices] = coeff
    return out


# ----------------------------------------------------------------------
# generator construction

_LETTERS: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...] = (
    ((1, 0), (0, 1)),    # identity
    ((1, 0), (0, -1)),   # reflection
    ((0, 1), (1, 0)),    # swap
    ((0, -1), (1, 0)),   # rotation (the only antisymmetric letter)
)

# minimal carrier size of n pairwise anticommuting antisymmetric
# square-roots of -I, for n <= 8; beyond that the period-8 doubling applies
_BASE_SIZE = {1: 2, 2: 4, 3: 4, 4: 8, 5: 8, 6: 8, 7: 8, 8: 16}


def _letter_matrix(idx: int) -> Matrix:
    return Matrix.from_rows(_LETTERS[idx], mode="sparse")


def _monomial_matrix(word: Tuple[int, ...]) -> Matrix:
    out = _letter_matrix(word[0])
    for idx in word[1:]:
        out = out.kron(_letter_matrix(idx))
    return out


def _anticommutes(a: Matrix, b: Matrix) -> bool:
    return (a @ b + b @ a).is_zero()


@lru_cache(maxsize=None)
def _search_base_generators(n: int) -> Tuple[Matrix, ...]:
    """First (in lexicographic monomial order) family of n pairwise
    anticommuting antisymmetric tensor monomials on the minimal carrier."""
    size = _BASE_SIZE[n]
    slots = size.bit_length() - 1
    candidates: List[Matrix] = []
    for word in itertools.product(range(4), repeat=slots):
        m = _monomial_matrix(word)
        if m.is_antisymmetric():
            candidates.append(m)
    neg_id = -Matrix.identity(size)
    candidates = [m for m in candidates if (m @ m) == neg_id]
    k = len(candidates)
    compat = [
        [(_anticommutes(candidates[i], candidates[j])) for j in range(k)]
        for i in range(k)
    ]
    chosen: List[int] = []

    def extend(start: int) -> bool:
        if len(chosen) == n:
            return True
        for c in range(start, k):
            if all(compat[c][p] for p in chosen):
                chosen.append(c)
                if extend(c + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        raise RuntimeError(f"no anticommuting family of size {n} on carrier {size}")
    return tuple(candidates[c] for c in chosen)


@lru_cache(maxsize=None)
def _anticommuting_generators(n: int) -> Tuple[Matrix, ...]:
    """n pairwise anticommuting antisymmetric matrices squaring to -I on
    the minimal carrier, via base search (n <= 8) and period-8 doubling."""
    if n <= 8:
        return _search_base_generators(n)
    low = _anticommuting_generators(n - 8)
    high = _anticommuting_generators(8)
    omega = high[0]
    for g in high[1:]:
        omega = omega @ g
    size_high = high[0].nrows
    # the volume element of eight generators is symmetric, squares to +I,
    # and anticommutes with each of them
    assert omega.transpose() == omega
    assert (omega @ omega) == Matrix.identity(size_high)
    eye_low = Matrix.identity(low[0].nrows)
    out = [a.kron(omega) for a in low]
    out.extend(eye_low.kron(g) for g in high)
    return tuple(out)


# ----------------------------------------------------------------------
# gamma sets

@dataclass
class GammaSet:
    """Bivector images K_ij of an irreducible even-Clifford representation.

    generators maps (i, j) with 1 <= i < j <= r to antisymmetric
    signed-permutation matrices with K_ij^2 = -I; half_label distinguishes
    the two inequivalent representations when r = 0 mod 4.
    """

    r: int
    dim: int
    generators: Dict[Tuple[int, int], Matrix]
    half_label: Optional[str] = None

    def __post_init__(self):
        expected = {(i, j) for i in range(1, self.r + 1) for j in range(i + 1, self.r + 1)}
        if set(self.generators) != expected:
            raise ValueError("generator keys must be all pairs i < j in 1..r")
        neg_id = -Matrix.identity(self.dim)
        for key, k in self.generators.items():
            as_signed_permutation(k)  # entries in {0, +-1}, one per row
            if not k.is_antisymmetric():
                raise ValueError(f"K{key} is not antisymmetric")
            if (k @ k) != neg_id:
                raise ValueError(f"K{key}^2 != -I")

    def gen(self, i: int, j: int) -> Matrix:
        """K_ij for any i != j, with K_ji = -K_ij."""
        if i == j:
            raise ValueError("bivector needs distinct indices")
        if i < j:
            return self.generators[(i, j)]
        return -self.generators[(j, i)]

    def pairs(self) -> List[Tuple[int, int]]:
        return sorted(self.generators)

    def volume(self) -> Matrix:
        """K_12 K_34 ... K_{r-1,r} (even ranks only)."""
        if self.r % 2:
            raise ValueError("volume element needs an even rank")
        out = self.generators[(1, 2)]
        for i in range(3, self.r, 2):
            out = out @ self.generators[(i, i + 1)]
        return out


def _gamma_from_generators(r: int, gens: Tuple[Matrix, ...], half_label=None) -> GammaSet:
    dim = gens[0].nrows
    table: Dict[Tuple[int, int], Matrix] = {}
    for i in range(1, r):
        table[(i, r)] = gens[i - 1]
    for i in range(1, r):
        for j in range(i + 1, r):
            table[(i, j)] = gens[i - 1] @ gens[j - 1]
    return GammaSet(r=r, dim=dim, generators=table, half_label=half_label)


def build_even_generators(r: int, max_rank: int = DEFAULT_MAX_RANK):
    """Bivector images for rank r.

    Returns a single GammaSet when r is not 0 mod 4, else the pair
    (plus, minus) of inequivalent halves, labeled so that the even volume
    element K_12 K_34 ... acts as +I on the plus half and -I on the minus
    half (a convention; nothing in the algebra prefers either sign).
    """
    if r < 2:
        raise ValueError(f"rank must be >= 2, got {r}")
    if r > max_rank:
        raise ValueError(f"rank {r} exceeds the configured maximum {max_rank}")
    gens = _anticommuting_generators(r - 1)
    info = irrep_info(r)
    if gens[0].nrows != info.dim:
        raise RuntimeError(
            f"carrier size {gens[0].nrows} disagrees with irrep dimension {info.dim}"
        )
    if r % 4 != 0:
        return _gamma_from_generators(r, gens)
    flipped = tuple(list(gens[:-1]) + [-gens[-1]])
    first = _gamma_from_generators(r, gens)
    second = _gamma_from_generators(r, flipped)
    eye = Matrix.identity(first.dim)
    vol_first = first.volume()
    if vol_first == eye:
        plus, minus = first, second
    elif vol_first == -eye:
        plus, minus = second, first
    else:
        raise RuntimeError("volume element is not +-I on an irreducible half")
    if plus.volume() != eye or minus.volume() != -eye:
        raise RuntimeError("volume signs of the two halves are inconsistent")
    plus.half_label = HALF_PLUS
    minus.half_label = HALF_MINUS
    return plus, minus


# ----------------------------------------------------------------------
# Schur / irreducibility certificate

def _conjugation_rows_full(perm, signs, n):
    """Rows of the condition X = K^T X K over all n^2 matrix positions.

    Each row has at most two nonzeros; position (a, b) is tied to
    (perm[a], perm[b]) with sign signs[a] * signs[b].
    """
    for a in range(n):
        pa, sa = perm[a], signs[a]
        for b in range(n):
            idx = a * n + b
            jdx = pa * n + perm[b]
            s = sa * signs[b]
            if jdx == idx:
                if s == -1:
                    yield {idx: 1}
            elif jdx > idx:
                yield {idx: 1, jdx: -s}


def schur_check(g: GammaSet) -> int:
    """Dimension of the commutant of the bivector images inside all
    dim x dim matrices; certifies irreducibility and the field type.

    Returns 1, 2 or 4 and raises if the computed dimension disagrees with
    the field type of irrep_info (which would mean a construction bug).
    """
    from .linalg import RowReducer, commutator

    n = g.dim
    red = RowReducer(n * n)
    chain = [(i, i + 1) for i in range(1, g.r)]
    for pair in chain:
        perm, signs = as_signed_permutation(g.generators[pair])
        for row in _conjugation_rows_full(perm, signs, n):
            red.add_row(row)
    found = red.nullity
    # the chain pairs generate every bivector image as an associative
    # product, so their joint commutant is the full commutant; verify the
    # computed basis against every pair anyway
    for coords in red.nullspace_rows():
        x = Matrix.from_entries(
            n, n, ((k // n, k % n, v) for k, v in coords.items())
        )
        for pair, kmat in g.generators.items():
            if not commutator(x, kmat).is_zero():
                raise RuntimeError(f"commutant candidate fails against K{pair}")
    expected = irrep_info(g.r).commutant_dim
    if found != expected:
        raise RuntimeError(
            f"commutant dimension {found} does not match field type "
            f"({expected}) for rank {g.r}: construction bug"
        )
    return found
