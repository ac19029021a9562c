"""Exact linear algebra: frozen examples and algebraic properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evenclifford.linalg import (
    Matrix,
    SubalgebraBasis,
    antisym_basis,
    as_signed_permutation,
    blockdiag,
    commutator,
    frobenius_inner,
    matrix_from_so_coordinates,
    nullspace_basis,
    project_off_span,
    rank,
    so_coordinates,
    vectors_rank,
)


# ----------------------------------------------------------------------
# independent oracle: textbook rational row reduction, no shared code path

def reference_rref(rows):
    """Plain Gauss-Jordan over Fraction lists; returns (rref_rows, pivots)."""
    m = [[Fraction(v) for v in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [v / m[r][c] for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [v - f * w for v, w in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def reference_rank(rows):
    return len(reference_rref(rows)[1])


def reference_nullspace(rows):
    m, pivots = reference_rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -m[r][f]
        out.append(v)
    return out


def same_span(vs1, vs2, ncols):
    d1 = vectors_rank(list(vs1), ncols)
    d2 = vectors_rank(list(vs2), ncols)
    both = vectors_rank(list(vs1) + list(vs2), ncols)
    return d1 == d2 == both


# ----------------------------------------------------------------------
# commutator

def test_commutator_identity_and_self():
    eye = Matrix.identity(3)
    b = Matrix.from_rows([[1, 2, 0], [0, 1, 5], [7, 0, 1]])
    assert commutator(eye, b).is_zero()
    assert commutator(b, b).is_zero()


def test_commutator_hand_example():
    # hand multiplication: AB = [[0,1],[1,0]], BA = [[0,-1],[-1,0]]
    a = Matrix.from_rows([[0, -1], [1, 0]])
    b = Matrix.from_rows([[1, 0], [0, -1]])
    expected = Matrix.from_rows([[0, 2], [2, 0]])
    assert commutator(a, b) == expected


def test_commutator_dimension_mismatch():
    a = Matrix.identity(2)
    b = Matrix.identity(3)
    with pytest.raises(ValueError):
        commutator(a, b)


# ----------------------------------------------------------------------
# rank and nullspace

def test_rank_trivial():
    assert rank(Matrix.zeros(3, 3)) == 0
    assert rank(Matrix.identity(5)) == 5


def test_rank_dependent_rows():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    assert rank(m) == 1
    assert reference_rank([[1, 2], [2, 4]]) == 1


def test_nullspace_identity_empty():
    assert nullspace_basis(Matrix.identity(4)) == []


def test_nullspace_zero_matrix_full():
    vecs = nullspace_basis(Matrix.zeros(2, 3))
    std = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert len(vecs) == 3
    assert same_span(vecs, std, 3)


def test_nullspace_derived_example():
    rows = [[1, 1, 0], [0, 0, 1]]
    expected = reference_nullspace(rows)
    assert [list(v) for v in expected] == [[1, -1, 0]]
    got = nullspace_basis(Matrix.from_rows(rows))
    assert len(got) == 1
    assert same_span(got, expected, 3)
    m = Matrix.from_rows(rows)
    for v in got:
        prod = [
            sum(m.entry(i, j) * v[j] for j in range(3)) for i in range(2)
        ]
        assert all(x == 0 for x in prod)


# ----------------------------------------------------------------------
# antisym basis

def test_antisym_basis_n2():
    basis = antisym_basis(2)
    assert len(basis) == 1
    assert basis[0] == Matrix.from_rows([[0, 1], [-1, 0]])


def test_antisym_basis_counts():
    assert len(antisym_basis(4)) == 6
    assert len(antisym_basis(16)) == 120
    assert antisym_basis(1) == []


def test_antisym_basis_order_and_coords():
    basis = antisym_basis(3)
    # lexicographic pairs (0,1), (0,2), (1,2) with +1 above the diagonal
    assert basis[0].entry(0, 1) == 1
    assert basis[1].entry(0, 2) == 1
    assert basis[2].entry(1, 2) == 1
    x = basis[0].scale(2) - basis[2].scale(3)
    coords = so_coordinates(x)
    assert coords == {0: Fraction(2), 2: Fraction(-3)}
    assert matrix_from_so_coordinates(3, coords) == x


# ----------------------------------------------------------------------
# projection

def test_project_member_is_zero():
    basis = antisym_basis(4)[:3]
    assert project_off_span(basis[1], basis).is_zero()


def test_project_orthogonal_unchanged():
    basis = antisym_basis(4)
    x = basis[5]
    assert project_off_span(x, basis[:3]) == x


def test_project_derived_example():
    # X = J + (E_02 - E_20) against span{J} in so(4): the Gram solve
    # returns the J coefficient 1, leaving the E_02 - E_20 part
    j = Matrix.from_entries(4, 4, [(0, 1, 1), (1, 0, -1), (2, 3, 1), (3, 2, -1)])
    e = Matrix.from_entries(4, 4, [(0, 2, 1), (2, 0, -1)])
    x = j + e
    gram = frobenius_inner(j, j)
    coeff = frobenius_inner(j, x) / gram
    assert coeff == 1
    assert project_off_span(x, [j]) == e


def test_project_degenerate_gram():
    z = Matrix.zeros(3, 3)
    with pytest.raises(ValueError):
        project_off_span(antisym_basis(3)[0], [z])


def test_project_idempotent_and_vanishes_on_span():
    basis = antisym_basis(5)[:4]
    x = antisym_basis(5)[6] + basis[0].scale(Fraction(3, 2))
    p1 = project_off_span(x, basis)
    assert project_off_span(p1, basis) == p1
    combo = basis[0].scale(2) - basis[3].scale(Fraction(5, 7))
    assert project_off_span(combo, basis).is_zero()


# ----------------------------------------------------------------------
# matrix plumbing

def test_dense_sparse_round_trip():
    m = Matrix.from_rows([[0, 1, 0], [2, 0, 0], [0, 0, -3]])
    s = m.to_sparse()
    assert s.mode == "sparse" and m.mode == "dense"
    assert s == m
    assert s.to_dense() == m
    assert s.to_dense().mode == "dense"


def test_kron_and_blockdiag():
    a = Matrix.from_rows([[0, 1], [-1, 0]])
    eye2 = Matrix.identity(2)
    k = a.kron(eye2)
    assert k.nrows == 4
    assert k.entry(0, 2) == 1 and k.entry(1, 3) == 1
    assert k.entry(2, 0) == -1 and k.entry(3, 1) == -1
    b = blockdiag([a, a.scale(2)])
    assert b.entry(0, 1) == 1 and b.entry(2, 3) == 2
    assert b.entry(0, 3) == 0


def test_as_signed_permutation():
    a = Matrix.from_rows([[0, 1], [-1, 0]])
    perm, signs = as_signed_permutation(a)
    assert perm == [1, 0] and signs == [1, -1]
    with pytest.raises(ValueError):
        as_signed_permutation(Matrix.from_rows([[1, 1], [0, 1]]))


def test_subalgebra_basis_validation():
    basis = antisym_basis(3)
    sb = SubalgebraBasis(3, basis)
    assert sb.dim == 3
    with pytest.raises(ValueError):
        SubalgebraBasis(3, basis + [basis[0] + basis[1]])
    with pytest.raises(ValueError):
        SubalgebraBasis(3, [Matrix.identity(3)])


# ----------------------------------------------------------------------
# properties

small_entries = st.integers(min_value=-5, max_value=5)


def square_matrices(n):
    return st.lists(
        st.lists(small_entries, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(Matrix.from_rows)


@settings(max_examples=50, deadline=None)
@given(square_matrices(3), square_matrices(3))
def test_commutator_antisymmetric_property(a, b):
    assert commutator(a, b) == -commutator(b, a)


@settings(max_examples=30, deadline=None)
@given(square_matrices(3), square_matrices(3), square_matrices(3))
def test_jacobi_identity(a, b, c):
    total = (
        commutator(a, commutator(b, c))
        + commutator(b, commutator(c, a))
        + commutator(c, commutator(a, b))
    )
    assert total.is_zero()


rect = st.integers(min_value=1, max_value=5)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=5).flatmap(
        lambda rows: st.integers(min_value=1, max_value=5).flatmap(
            lambda cols: st.lists(
                st.lists(small_entries, min_size=cols, max_size=cols),
                min_size=rows,
                max_size=rows,
            )
        )
    )
)
def test_rank_nullity_and_reference(rows):
    m = Matrix.from_rows(rows)
    r = rank(m)
    ns = nullspace_basis(m)
    assert r + len(ns) == m.ncols
    assert r == reference_rank(rows)
    assert same_span(ns, reference_nullspace(rows), m.ncols)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.integers(min_value=0, max_value=5),
            st.integers(min_value=0, max_value=5),
            small_entries,
        ),
        max_size=10,
    )
)
def test_sparse_dense_agree(entries):
    sparse = Matrix.from_entries(6, 6, entries, mode="sparse")
    dense = sparse.to_dense()
    assert rank(sparse) == rank(dense)
    assert same_span(nullspace_basis(sparse), nullspace_basis(dense), 6)
    assert sparse == dense
