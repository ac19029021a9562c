"""Centralizer and normalizer of the embedded spin(r) inside so(N).

The centralizer {X in so(N) : [X, J_ij] = 0 for all i < j} is computed by
stacking exact linear conditions in antisymmetric-basis coordinates and
extracting the nullspace.  Since each J is a signed permutation, the
condition [X, J] = 0 is equivalent to X = J^T X J, which couples at most
two coordinates per row; the conditions are generated lazily per bivector
and stay 2-sparse throughout the elimination.

Conditions are stacked over the chain bivectors (i, i+1) only: an X that
commutes with those commutes with all their brackets (Jacobi), hence with
every bivector image.  Every returned element is nevertheless verified
against all C(r,2) bivectors exactly.

The normalizer {X : [X, J_ij] in span{J_kl}} equals centralizer + span{J}:
span{J} is bracket-closed, so for X = w + y with w in the span and y
trace-orthogonal to it, invariance of the trace form gives
<[y, J], Z> = <y, [J, Z]> = 0 for all Z in the span, i.e. [y, J] lies in
the span and in its orthogonal complement, hence vanishes and y
centralizes.  Each returned element is verified by exact trace-form
projection of its brackets off the span.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Tuple

from .linalg import (
    EXACT,
    FLOAT,
    Matrix,
    RowReducer,
    SpanProjector,
    SubalgebraBasis,
    antisym_pairs,
    commutator,
    matrix_from_so_coordinates,
    so_coordinates,
)
from .structures import EvenCliffordStructure, Multiplicities


def _binom2(n: int) -> int:
    return n * (n - 1) // 2 if n >= 2 else 0


def _chain_pairs(r: int) -> List[Tuple[int, int]]:
    return [(i, i + 1) for i in range(1, r)]


def _pair_index(n: int) -> Dict[Tuple[int, int], int]:
    return {pair: k for k, pair in enumerate(antisym_pairs(n))}


def _conjugation_rows_antisym(
    perm: List[int], signs: List[int], n: int, index: Dict[Tuple[int, int], int]
) -> Iterator[Dict[int, int]]:
    """Rows of X = J^T X J over antisymmetric coordinates x_ab (a < b):
    x_ab - s x_cd with (c, d) the image of (a, b) and s the sign carried.
    At most two nonzeros per row."""
    for a in range(n):
        pa, sa = perm[a], signs[a]
        for b in range(a + 1, n):
            c, d = pa, perm[b]
            s = sa * signs[b]
            if c > d:
                c, d = d, c
                s = -s
            idx = index[(a, b)]
            jdx = index[(c, d)]
            if jdx == idx:
                if s == -1:
                    yield {idx: 1}
            elif jdx > idx:
                yield {idx: 1, jdx: -s}


def _centralizer_reducer(s: EvenCliffordStructure, mode: str, tol: float) -> RowReducer:
    n = s.N
    index = _pair_index(n)
    red = RowReducer(len(index), mode=mode, tol=tol)
    for pair in _chain_pairs(s.r):
        perm, signs = s.signed_form(pair)
        for row in _conjugation_rows_antisym(perm, signs, n, index):
            red.add_row(row)
    return red


def centralizer_basis(s: EvenCliffordStructure) -> SubalgebraBasis:
    """Exact basis of {X in so(N) : [X, J_ij] = 0 for all i < j}.

    Every element of the returned basis commutes with every J_ij exactly
    (verified; a failure would be a bug and raises)."""
    red = _centralizer_reducer(s, EXACT, 0.0)
    elements = [
        matrix_from_so_coordinates(s.N, coords) for coords in red.nullspace_rows()
    ]
    for x in elements:
        for pair in s.pairs():
            if not commutator(x, s.J[pair]).is_zero():
                raise RuntimeError(f"centralizer candidate fails against J{pair}")
    return SubalgebraBasis(s.N, elements)


def normalizer_basis(s: EvenCliffordStructure) -> SubalgebraBasis:
    """Exact basis of {X in so(N) : [X, J_ij] in span{J_kl} for all i < j}.

    Contains the centralizer and the J_ij themselves; equals their sum
    (see the module docstring for the trace-form argument).  Every element
    is verified by exact projection of its brackets off the span."""
    cent = centralizer_basis(s)
    n = s.N
    ncoords = n * (n - 1) // 2
    red = RowReducer(ncoords, EXACT)
    elements: List[Matrix] = []
    for x in cent:
        red.add_row(so_coordinates(x))
        elements.append(x)
    for pair in s.pairs():
        jmat = s.J[pair]
        before = red.rank
        red.add_row(so_coordinates(jmat))
        if red.rank > before:
            elements.append(jmat)
    projector = SpanProjector(
        _independent_subset([s.J[pair] for pair in s.pairs()], n)
    )
    for x in elements:
        for pair in s.pairs():
            if not projector.residual(commutator(x, s.J[pair])).is_zero():
                raise RuntimeError(f"normalizer candidate fails against J{pair}")
    return SubalgebraBasis(s.N, elements)


def _independent_subset(mats: List[Matrix], n: int) -> List[Matrix]:
    red = RowReducer(n * (n - 1) // 2, EXACT)
    out = []
    for m in mats:
        before = red.rank
        red.add_row(so_coordinates(m))
        if red.rank > before:
            out.append(m)
    return out


# ----------------------------------------------------------------------
# closed-form dimensions

@dataclass(frozen=True)
class CommutantDims:
    centralizer: int
    normalizer: int


def expected_dims(r: int, mult) -> CommutantDims:
    """Closed-form centralizer and normalizer dimensions by rank class.

    Centralizer: so(m1) + so(m2) for r = 0 mod 8; so(m) for r = 1, 7;
    u(m) for r = 2, 6; sp(m) for r = 3, 5; sp(m1) + sp(m2) for r = 4
    (all mod 8).  The normalizer adds C(r, 2), the embedded spin(r)."""
    if r < 3:
        raise ValueError("closed-form commutant dimensions require rank >= 3")
    mult = Multiplicities.coerce(mult, r)
    k = r % 8
    if k == 0:
        cent = _binom2(mult.m1) + _binom2(mult.m2)
    elif k in (1, 7):
        cent = _binom2(mult.m)
    elif k in (2, 6):
        cent = mult.m * mult.m
    elif k in (3, 5):
        cent = mult.m * (2 * mult.m + 1)
    else:  # k == 4
        cent = mult.m1 * (2 * mult.m1 + 1) + mult.m2 * (2 * mult.m2 + 1)
    return CommutantDims(centralizer=cent, normalizer=cent + _binom2(r))


def isotropy_dim(r: int, mult) -> int:
    """Dimension of the maximal isotropy algebra: centralizer + spin(r)."""
    if r < 3:
        raise ValueError("isotropy dimension requires rank >= 3")
    return expected_dims(r, mult).normalizer


# ----------------------------------------------------------------------
# float64 mode for large instances

@dataclass(frozen=True)
class NumericalDims:
    """Commutant dimensions computed in float64 with a pivot threshold.
    Labeled numerical: exact for the integer condition rows in practice,
    but carrying no exactness certificate."""

    centralizer: int
    normalizer: int
    tolerance: float
    mode: str = "numerical"


def numerical_commutant_dims(s: EvenCliffordStructure, tol: float = 1e-9) -> NumericalDims:
    """Centralizer and normalizer dimensions via float64 elimination.

    The normalizer dimension is centralizer + rank(span{J}), the
    decomposition being forced by the trace form (module docstring);
    requires rank >= 3 so that the two parts meet trivially."""
    if s.r < 3:
        raise ValueError("numerical commutant dimensions require rank >= 3")
    red = _centralizer_reducer(s, FLOAT, tol)
    cent = red.nullity
    ncoords = s.N * (s.N - 1) // 2
    span_red = RowReducer(ncoords, FLOAT, tol)
    for pair in s.pairs():
        span_red.add_row(
            {k: float(v) for k, v in so_coordinates(s.J[pair]).items()}
        )
    return NumericalDims(
        centralizer=cent,
        normalizer=cent + span_red.rank,
        tolerance=tol,
    )


# ----------------------------------------------------------------------
# independent oracle: orbit counting with sign parity

def _commutant_dim_by_orbits(
    forms: Iterable[Tuple[List[int], List[int]]], n: int, antisym: bool = True
) -> int:
    """Dimension of the joint commutant of signed permutations by counting
    sign-consistent orbits of matrix positions (union-find with parity).
    Used as an elimination-free cross-check in the tests."""
    if antisym:
        positions = antisym_pairs(n)
    else:
        positions = [(a, b) for a in range(n) for b in range(n)]
    index = {p: i for i, p in enumerate(positions)}
    parent = list(range(len(positions)))
    rel = [1] * len(positions)
    alive = [True] * len(positions)

    def find(i: int) -> Tuple[int, int]:
        sign = 1
        while parent[i] != i:
            sign *= rel[i]
            i = parent[i]
        return i, sign

    def union(i: int, j: int, s: int) -> None:
        ri, si = find(i)
        rj, sj = find(j)
        if ri == rj:
            if si != s * sj:
                alive[ri] = False
            return
        parent[ri] = rj
        rel[ri] = si * s * sj
        if not alive[ri]:
            alive[rj] = False

    for perm, signs in forms:
        for (a, b) in positions:
            c, d = perm[a], perm[b]
            s = signs[a] * signs[b]
            if antisym and c > d:
                c, d = d, c
                s = -s
            union(index[(a, b)], index[(c, d)], s)

    roots = set()
    dead_roots = set()
    for i in range(len(positions)):
        root, _ = find(i)
        roots.add(root)
        if not alive[root]:
            dead_roots.add(root)
    return len(roots) - len(dead_roots)
