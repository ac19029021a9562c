"""Exact rational and sparse-integer linear algebra.

Computational substrate for the whole package: an immutable exact matrix
type with dense and sparse storage modes, fraction-free rank / nullspace
computation, the standard basis of antisymmetric matrices, and projections
with respect to the trace inner product.  A float64 mode with a pivot
threshold (default 1e-9) exists for large instances; callers label results
obtained that way as "numerical".
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

Rational = Fraction

DENSE = "dense"
SPARSE = "sparse"

EntryLike = Union[int, Fraction, str]


def _coerce(value: EntryLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(
        f"matrix entries must be exact (int/Fraction/str), got {type(value).__name__}"
    )


class Matrix:
    """An immutable matrix with exact rational entries.

    Two storage modes exist: ``dense`` (tuple of row tuples) and ``sparse``
    (tuple of ``{col: value}`` dicts holding nonzeros only).  The two modes
    agree entrywise, convert losslessly into each other, and all operations
    return new values.
    """

    __slots__ = ("nrows", "ncols", "mode", "_rows")

    def __init__(self, nrows: int, ncols: int, mode: str, rows) -> None:
        if mode not in (DENSE, SPARSE):
            raise ValueError(f"unknown storage mode {mode!r}")
        self.nrows = nrows
        self.ncols = ncols
        self.mode = mode
        self._rows = rows

    # ------------------------------------------------------------------
    # constructors

    @staticmethod
    def from_rows(rows: Sequence[Sequence[EntryLike]], mode: str = DENSE) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged rows")
        if mode == DENSE:
            data = tuple(tuple(_coerce(v) for v in row) for row in rows)
            return Matrix(nrows, ncols, DENSE, data)
        data = tuple(
            {j: _coerce(v) for j, v in enumerate(row) if _coerce(v) != 0} for row in rows
        )
        return Matrix(nrows, ncols, SPARSE, data)

    @staticmethod
    def from_entries(
        nrows: int,
        ncols: int,
        entries: Iterable[Tuple[int, int, EntryLike]],
        mode: str = SPARSE,
    ) -> "Matrix":
        rows: List[Dict[int, Fraction]] = [dict() for _ in range(nrows)]
        for i, j, v in entries:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ValueError(f"entry ({i},{j}) outside {nrows}x{ncols}")
            fv = _coerce(v)
            if fv == 0:
                rows[i].pop(j, None)
            else:
                rows[i][j] = fv
        m = Matrix(nrows, ncols, SPARSE, tuple(rows))
        return m if mode == SPARSE else m.to_dense()

    @staticmethod
    def zeros(nrows: int, ncols: int | None = None, mode: str = SPARSE) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        if mode == SPARSE:
            return Matrix(nrows, ncols, SPARSE, tuple({} for _ in range(nrows)))
        zero = Fraction(0)
        return Matrix(nrows, ncols, DENSE, tuple((zero,) * ncols for _ in range(nrows)))

    @staticmethod
    def identity(n: int, mode: str = SPARSE) -> "Matrix":
        one = Fraction(1)
        if mode == SPARSE:
            return Matrix(n, n, SPARSE, tuple({i: one} for i in range(n)))
        zero = Fraction(0)
        return Matrix(
            n, n, DENSE,
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)),
        )

    # ------------------------------------------------------------------
    # access

    def entry(self, i: int, j: int) -> Fraction:
        if self.mode == DENSE:
            return self._rows[i][j]
        return self._rows[i].get(j, Fraction(0))

    def row_items(self, i: int) -> List[Tuple[int, Fraction]]:
        """Nonzero entries of row ``i`` as sorted ``(col, value)`` pairs."""
        if self.mode == DENSE:
            return [(j, v) for j, v in enumerate(self._rows[i]) if v != 0]
        return sorted(self._rows[i].items())

    def row_dict(self, i: int) -> Dict[int, Fraction]:
        if self.mode == DENSE:
            return {j: v for j, v in enumerate(self._rows[i]) if v != 0}
        return dict(self._rows[i])

    def _row_raw(self, i: int) -> Dict[int, Fraction]:
        """Internal nonzero view of row i; callers must not mutate."""
        if self.mode == DENSE:
            return {j: v for j, v in enumerate(self._rows[i]) if v != 0}
        return self._rows[i]

    def nnz(self) -> int:
        return sum(len(self.row_items(i)) for i in range(self.nrows))

    def to_lists(self) -> List[List[Fraction]]:
        return [[self.entry(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    # ------------------------------------------------------------------
    # conversions

    def to_dense(self) -> "Matrix":
        if self.mode == DENSE:
            return self
        zero = Fraction(0)
        data = tuple(
            tuple(self._rows[i].get(j, zero) for j in range(self.ncols))
            for i in range(self.nrows)
        )
        return Matrix(self.nrows, self.ncols, DENSE, data)

    def to_sparse(self) -> "Matrix":
        if self.mode == SPARSE:
            return self
        data = tuple(
            {j: v for j, v in enumerate(row) if v != 0} for row in self._rows
        )
        return Matrix(self.nrows, self.ncols, SPARSE, data)

    # ------------------------------------------------------------------
    # algebra

    def _same_shape(self, other: "Matrix") -> None:
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        zero = Fraction(0)
        rows = []
        for i in range(self.nrows):
            acc = self.row_dict(i)
            for j, v in other._row_raw(i).items():
                nv = acc.get(j, zero) + v
                if nv == 0:
                    acc.pop(j, None)
                else:
                    acc[j] = nv
            rows.append(acc)
        out = Matrix(self.nrows, self.ncols, SPARSE, tuple(rows))
        return out if self.mode == SPARSE else out.to_dense()

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c: EntryLike) -> "Matrix":
        fc = _coerce(c)
        rows = []
        for i in range(self.nrows):
            if fc == 0:
                rows.append({})
            else:
                rows.append({j: v * fc for j, v in self.row_items(i)})
        out = Matrix(self.nrows, self.ncols, SPARSE, tuple(rows))
        return out if self.mode == SPARSE else out.to_dense()

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.matmul(other)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        zero = Fraction(0)
        rows = []
        for i in range(self.nrows):
            acc: Dict[int, Fraction] = {}
            for k, v in self._row_raw(i).items():
                for j, w in other._row_raw(k).items():
                    nv = acc.get(j, zero) + v * w
                    if nv == 0:
                        acc.pop(j, None)
                    else:
                        acc[j] = nv
            rows.append(acc)
        out = Matrix(self.nrows, other.ncols, SPARSE, tuple(rows))
        return out if self.mode == SPARSE else out.to_dense()

    def transpose(self) -> "Matrix":
        rows: List[Dict[int, Fraction]] = [dict() for _ in range(self.ncols)]
        for i in range(self.nrows):
            for j, v in self.row_items(i):
                rows[j][i] = v
        out = Matrix(self.ncols, self.nrows, SPARSE, tuple(rows))
        return out if self.mode == SPARSE else out.to_dense()

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product, left factor varying slowest."""
        rows: List[Dict[int, Fraction]] = [
            dict() for _ in range(self.nrows * other.nrows)
        ]
        for i in range(self.nrows):
            items = self.row_items(i)
            if not items:
                continue
            for k in range(other.nrows):
                target = rows[i * other.nrows + k]
                sub = other.row_items(k)
                for j, v in items:
                    for l, w in sub:
                        target[j * other.ncols + l] = v * w
        out = Matrix(self.nrows * other.nrows, self.ncols * other.ncols, SPARSE, tuple(rows))
        return out if self.mode == SPARSE or other.mode == SPARSE else out.to_dense()

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.entry(i, i) for i in range(self.nrows)), Fraction(0))

    # ------------------------------------------------------------------
    # predicates

    def is_zero(self) -> bool:
        return all(not self.row_items(i) for i in range(self.nrows))

    def is_antisymmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        for i in range(self.nrows):
            for j, v in self.row_items(i):
                if self.entry(j, i) != -v:
                    return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(
            self.row_dict(i) == other.row_dict(i) for i in range(self.nrows)
        )

    def __hash__(self):
        return hash(
            (self.nrows, self.ncols, tuple(tuple(self.row_items(i)) for i in range(self.nrows)))
        )

    def __repr__(self) -> str:
        if max(self.nrows, self.ncols) <= 6:
            body = "; ".join(
                " ".join(str(self.entry(i, j)) for j in range(self.ncols))
                for i in range(self.nrows)
            )
            return f"Matrix({self.nrows}x{self.ncols} [{body}])"
        return f"Matrix({self.nrows}x{self.ncols}, {self.mode}, nnz={self.nnz()})"


def blockdiag(blocks: Sequence[Matrix]) -> Matrix:
    """Block-diagonal assembly of square blocks (sparse result)."""
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    rows: List[Dict[int, Fraction]] = [dict() for _ in range(n)]
    roff = 0
    coff = 0
    for b in blocks:
        for i in range(b.nrows):
            for j, v in b.row_items(i):
                rows[roff + i][coff + j] = v
        roff += b.nrows
        coff += b.ncols
    return Matrix(n, m, SPARSE, tuple(rows))


def submatrix(m: Matrix, rows: range, cols: range) -> Matrix:
    picked_rows = list(rows)
    picked_cols = {c: k for k, c in enumerate(cols)}
    data: List[Dict[int, Fraction]] = []
    for i in picked_rows:
        acc = {}
        for j, v in m.row_items(i):
            if j in picked_cols:
                acc[picked_cols[j]] = v
        data.append(acc)
    return Matrix(len(picked_rows), len(picked_cols), SPARSE, tuple(data))


def frobenius_inner(a: Matrix, b: Matrix) -> Fraction:
    """Trace inner product trace(a^T b) = sum of entrywise products."""
    a._same_shape(b)
    total = Fraction(0)
    for i in range(a.nrows):
        arow = a._row_raw(i)
        if not arow:
            continue
        brow = b._row_raw(i)
        if not brow:
            continue
        if len(brow) < len(arow):
            arow, brow = brow, arow
        for j, v in arow.items():
            w = brow.get(j)
            if w is not None:
                total += v * w
    return total


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """The bracket a*b - b*a of two square matrices of equal size."""
    if a.nrows != a.ncols or b.nrows != b.ncols or a.nrows != b.nrows:
        raise ValueError("commutator requires square matrices of equal size")
    return a @ b - b @ a


def as_signed_permutation(m: Matrix) -> Tuple[List[int], List[int]]:
    """Decompose a signed-permutation matrix into (perm, signs).

    Row i has its single nonzero at column perm[i] with value signs[i] in
    {-1, +1}.  Raises ValueError if the matrix is not of this shape.
    """
    if m.nrows != m.ncols:
        raise ValueError("not square")
    perm = [-1] * m.nrows
    signs = [0] * m.nrows
    seen = set()
    for i in range(m.nrows):
        items = m.row_items(i)
        if len(items) != 1:
            raise ValueError(f"row {i} has {len(items)} nonzeros, expected exactly 1")
        j, v = items[0]
        if v != 1 and v != -1:
            raise ValueError(f"entry ({i},{j}) is {v}, expected +-1")
        if j in seen:
            raise ValueError(f"column {j} hit twice")
        seen.add(j)
        perm[i] = j
        signs[i] = 1 if v == 1 else -1
    return perm, signs


# ----------------------------------------------------------------------
# elimination engine

EXACT = "exact"
FLOAT = "float"


def _primitive_int_row(row: Dict[int, Fraction]) -> Dict[int, int]:
    """Scale a rational row to a primitive integer row with positive lead."""
    if not row:
        return {}
    denom_lcm = 1
    for v in row.values():
        denom_lcm = denom_lcm * v.denominator // math.gcd(denom_lcm, v.denominator)
    ints = {j: int(v * denom_lcm) for j, v in row.items() if v != 0}
    if not ints:
        return {}
    g = 0
    for v in ints.values():
        g = math.gcd(g, v)
    lead = min(ints)
    flip = -1 if ints[lead] < 0 else 1
    g *= flip
    return {j: v // g for j, v in ints.items()}


class RowReducer:
    """Streaming sparse row elimination.

    Exact mode keeps rows as primitive integer vectors and eliminates by
    fraction-free cross multiplication (divide by content after each step);
    within a column the row with the smaller-magnitude pivot entry is kept
    as the pivot to control coefficient growth.  Float mode uses float64
    with an absolute pivot threshold and prefers large-magnitude pivots.
    """

    def __init__(self, ncols: int, mode: str = EXACT, tol: float = 1e-9) -> None:
        if mode not in (EXACT, FLOAT):
            raise ValueError(f"unknown mode {mode!r}")
        self.ncols = ncols
        self.mode = mode
        self.tol = tol
        self.pivots: Dict[int, Dict[int, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def nullity(self) -> int:
        return self.ncols - len(self.pivots)

    def add_row(self, row: Dict[int, object]) -> None:
        if self.mode == EXACT:
            self._add_exact({j: _coerce(v) for j, v in row.items() if v})
        else:
            self._add_float({j: float(v) for j, v in row.items()})

    def _add_exact(self, frac_row: Dict[int, Fraction]) -> None:
        row = _primitive_int_row(frac_row)
        pivots = self.pivots
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = row
                return
            if abs(row[c]) < abs(piv[c]):
                pivots[c] = row
                row, piv = piv, row
            a = row[c]
            b = piv[c]
            g = math.gcd(a, b)
            fr = b // g
            fp = a // g
            out = {j: v * fr for j, v in row.items()}
            for j, v in piv.items():
                nv = out.get(j, 0) - v * fp
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
            if out:
                g2 = 0
                for v in out.values():
                    g2 = math.gcd(g2, v)
                lead = min(out)
                if out[lead] < 0:
                    g2 = -g2
                row = {j: v // g2 for j, v in out.items()}
            else:
                row = out

    def _add_float(self, row: Dict[int, float]) -> None:
        tol = self.tol
        row = {j: v for j, v in row.items() if abs(v) > tol}
        pivots = self.pivots
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = row
                return
            if abs(row[c]) > abs(piv[c]):
                pivots[c] = row
                row, piv = piv, row
            f = row[c] / piv[c]
            out = dict(row)
            for j, v in piv.items():
                nv = out.get(j, 0.0) - f * v
                if abs(nv) > tol:
                    out[j] = nv
                else:
                    out.pop(j, None)
            out.pop(c, None)
            row = out

    def nullspace_rows(self) -> List[Dict[int, Fraction]]:
        """Basis of the nullspace of all rows seen so far, one primitive
        vector per free column (exact mode)."""
        if self.mode != EXACT:
            raise ValueError("nullspace vectors are exact-mode only")
        pivot_cols = sorted(self.pivots, reverse=True)
        free_cols = [c for c in range(self.ncols) if c not in self.pivots]
        out = []
        for f in free_cols:
            x: Dict[int, Fraction] = {f: Fraction(1)}
            for p in pivot_cols:
                if p > f:
                    continue
                prow = self.pivots[p]
                s = Fraction(0)
                for k, v in prow.items():
                    if k != p:
                        xv = x.get(k)
                        if xv is not None:
                            s += v * xv
                if s:
                    x[p] = -s / prow[p]
            vec = _primitive_int_row(x)
            out.append({j: Fraction(v) for j, v in vec.items()})
        return out


def _matrix_rows(m: Matrix) -> Iterator[Dict[int, Fraction]]:
    for i in range(m.nrows):
        yield m.row_dict(i)


def rank(m: Matrix) -> int:
    """Exact rank over the rationals (identical for dense and sparse)."""
    red = RowReducer(m.ncols, EXACT)
    for row in _matrix_rows(m):
        red.add_row(row)
    return red.rank


def nullspace_basis(m: Matrix) -> List[Tuple[Fraction, ...]]:
    """Exact rational basis of the right nullspace {v : m v = 0}."""
    red = RowReducer(m.ncols, EXACT)
    for row in _matrix_rows(m):
        red.add_row(row)
    vectors = []
    for coords in red.nullspace_rows():
        vectors.append(tuple(coords.get(j, Fraction(0)) for j in range(m.ncols)))
    return vectors


def vectors_rank(vectors: Iterable[Dict[int, Fraction] | Sequence[Fraction]], ncols: int) -> int:
    """Rank of a family of coordinate vectors (dict or sequence form)."""
    red = RowReducer(ncols, EXACT)
    for v in vectors:
        if isinstance(v, dict):
            red.add_row(v)
        else:
            red.add_row({j: x for j, x in enumerate(v) if x})
    return red.rank


# ----------------------------------------------------------------------
# antisymmetric matrices and their coordinates

def antisym_pairs(n: int) -> List[Tuple[int, int]]:
    """Index pairs (a, b), a < b, in lexicographic order."""
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


def antisym_basis(n: int) -> List[Matrix]:
    """Standard basis E_ab - E_ba (entry (a,b) = +1, a < b) of the
    antisymmetric n x n matrices, in lexicographic (a, b) order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for a, b in antisym_pairs(n):
        out.append(Matrix.from_entries(n, n, [(a, b, 1), (b, a, -1)]))
    return out


def so_coordinates(m: Matrix) -> Dict[int, Fraction]:
    """Coordinates of an antisymmetric matrix in the antisym_basis order."""
    n = m.nrows
    index = {}
    k = 0
    for a in range(n):
        for b in range(a + 1, n):
            index[(a, b)] = k
            k += 1
    coords: Dict[int, Fraction] = {}
    for i in range(n):
        for j, v in m._row_raw(i).items():
            if i < j:
                coords[index[(i, j)]] = v
    return coords


def matrix_from_so_coordinates(n: int, coords: Dict[int, Fraction]) -> Matrix:
    pairs = antisym_pairs(n)
    entries = []
    for k, v in coords.items():
        a, b = pairs[k]
        entries.append((a, b, v))
        entries.append((b, a, -v))
    return Matrix.from_entries(n, n, entries)


# ----------------------------------------------------------------------
# subalgebra bases and trace-form projection

class SubalgebraBasis:
    """A linearly independent list of antisymmetric N x N matrices."""

    def __init__(self, ambient_dim: int, elements: Sequence[Matrix], check: bool = True):
        self.ambient_dim = ambient_dim
        self.elements = tuple(elements)
        if check:
            self._validate()

    def _validate(self) -> None:
        n = self.ambient_dim
        for k, el in enumerate(self.elements):
            if el.nrows != n or el.ncols != n:
                raise ValueError(f"element {k} is {el.nrows}x{el.ncols}, ambient dim {n}")
            if not el.is_antisymmetric():
                raise ValueError(f"element {k} is not antisymmetric")
        got = vectors_rank(
            (so_coordinates(el) for el in self.elements), len(antisym_pairs(n))
        )
        if got != len(self.elements):
            raise ValueError(
                f"elements are linearly dependent (rank {got} of {len(self.elements)})"
            )

    @property
    def dim(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    def to_json_dict(self) -> dict:
        triplets = []
        for k, el in enumerate(self.elements):
            for i in range(el.nrows):
                for j, v in el.row_items(i):
                    triplets.append([k, i, j, _entry_json(v)])
        return {
            "ambient_dim": self.ambient_dim,
            "count": len(self.elements),
            "elements": triplets,
        }


def _entry_json(v: Fraction):
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


class SpanProjector:
    """Orthogonal projection off the span of a fixed matrix family
    with respect to the trace inner product trace(A^T B)."""

    def __init__(self, basis: Sequence[Matrix]):
        self.basis = list(basis)
        k = len(self.basis)
        if k == 0:
            self._inv = []
            return
        gram = [
            [frobenius_inner(self.basis[i], self.basis[j]) for j in range(k)]
            for i in range(k)
        ]
        self._inv = _invert_dense_exact(gram)

    def coefficients(self, x: Matrix) -> List[Fraction]:
        t = [frobenius_inner(b, x) for b in self.basis]
        support = [j for j, v in enumerate(t) if v != 0]
        zero = Fraction(0)
        return [
            sum((self._inv[i][j] * t[j] for j in support), zero)
            for i in range(len(t))
        ]

    def residual(self, x: Matrix) -> Matrix:
        if not self.basis or x.is_zero():
            return x
        coeffs = self.coefficients(x)
        out = x
        for c, b in zip(coeffs, self.basis):
            if c != 0:
                out = out - b.scale(c)
        return out

    def contains(self, x: Matrix) -> bool:
        return self.residual(x).is_zero()


def _invert_dense_exact(a: List[List[Fraction]]) -> List[List[Fraction]]:
    """Exact inverse of a small dense rational matrix (Gauss-Jordan)."""
    k = len(a)
    work = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(k)]
            for i, row in enumerate(a)]
    for col in range(k):
        piv = None
        for r in range(col, k):
            if work[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise ValueError("degenerate Gram matrix")
        work[col], work[piv] = work[piv], work[col]
        pv = work[col][col]
        work[col] = [v / pv for v in work[col]]
        for r in range(k):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[col])]
    return [row[k:] for row in work]


def project_off_span(x: Matrix, basis) -> Matrix:
    """x minus its orthogonal projection onto span(basis) under the trace
    inner product.  Zero exactly when x lies in the span.  Raises on a
    degenerate Gram matrix."""
    elements = basis.elements if isinstance(basis, SubalgebraBasis) else list(basis)
    return SpanProjector(elements).residual(x)
