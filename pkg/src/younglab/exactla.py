"""Dense exact linear algebra over arbitrary-precision rationals.

This is the shared engine for the multiplicity system and the form spaces.
Everything is exact: entries are fractions.Fraction, pivots are the first
nonzero entry of each column, and no floating point appears anywhere.

A fraction-free Bareiss elimination is available as a rank-only fast path
for integer matrices; its output is cross-checked against the plain
Gauss-Jordan reduction in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatchError, NotInvariantError

Vector = tuple[Fraction, ...]


def _frac_row(row: Iterable) -> Vector:
    return tuple(Fraction(x) for x in row)


class RationalMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, rows: Sequence[Iterable], cols: Optional[int] = None):
        self.entries: tuple[Vector, ...] = tuple(_frac_row(r) for r in rows)
        self.rows = len(self.entries)
        if self.rows:
            widths = {len(r) for r in self.entries}
            if len(widths) != 1:
                raise DimensionMismatchError("ragged rows")
            self.cols = widths.pop()
            if cols is not None and cols != self.cols:
                raise DimensionMismatchError("cols does not match row width")
        else:
            if cols is None:
                raise DimensionMismatchError("empty matrix needs explicit cols")
            self.cols = cols

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        one, zero = Fraction(1), Fraction(0)
        return RationalMatrix(
            [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(rows: int, cols: int) -> "RationalMatrix":
        return RationalMatrix([[0] * cols for _ in range(rows)], cols=cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(x) for x in row) for row in self.entries
        )
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def matvec(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError(f"vector length {len(v)} != cols {self.cols}")
        vv = _frac_row(v)
        zero = Fraction(0)
        return tuple(
            sum((r[j] * vv[j] for j in range(self.cols) if r[j] and vv[j]), zero)
            for r in self.entries
        )

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError("inner dimensions differ")
        cols = other.cols
        out = []
        for r in self.entries:
            out.append(
                [sum(r[k] * other.entries[k][j] for k in range(self.cols))
                 for j in range(cols)]
            )
        return RationalMatrix(out, cols=cols)


def rref(a: RationalMatrix) -> tuple[RationalMatrix, int, list[int]]:
    """Reduced row echelon form, rank, and pivot columns.

    Deterministic: the pivot of each step is the first row with a nonzero
    entry in the current column, and pivots are fully reduced above and
    below.
    """
    m = [list(row) for row in a.entries]
    nrows, ncols = a.rows, a.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        src = next((i for i in range(r, nrows) if m[i][c]), None)
        if src is None:
            continue
        m[r], m[src] = m[src], m[r]
        mr = m[r]
        inv = 1 / mr[c]
        if inv != 1:
            # rows at and below r are zero left of c, so start there
            mr[c:] = [x * inv for x in mr[c:]]
        for i in range(nrows):
            mi = m[i]
            f = mi[c]
            if i != r and f:
                mi[c:] = [x - f * y for x, y in zip(mi[c:], mr[c:])]
        pivots.append(c)
        r += 1
    return RationalMatrix(m, cols=ncols), len(pivots), pivots


def rank(a: RationalMatrix) -> int:
    return rref(a)[1]


def rank_bareiss(a: RationalMatrix) -> int:
    """Rank by fraction-free elimination; fast path for integer matrices."""
    m: list[list[int]] = []
    for row in a.entries:
        denom = 1
        for x in row:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        m.append([int(x * denom) for x in row])
    nrows, ncols = a.rows, a.cols
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        src = next((i for i in range(r, nrows) if m[i][c]), None)
        if src is None:
            continue
        m[r], m[src] = m[src], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class Subspace:
    """A subspace of Q^d held as a reduced-row-echelon basis.

    The RREF basis is canonical, so two Subspace objects are equal exactly
    when they describe the same subspace.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, spanning_rows: Sequence[Iterable]):
        mat = RationalMatrix(list(spanning_rows), cols=ambient_dim)
        red, rk, pivots = rref(mat)
        self.ambient_dim = ambient_dim
        self.basis = RationalMatrix(red.entries[:rk], cols=ambient_dim)
        self.pivots = pivots

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """Coefficients of v in the RREF basis, or None if v is outside."""
        vv = list(_frac_row(v))
        if len(vv) != self.ambient_dim:
            raise DimensionMismatchError("vector has wrong length")
        coords = []
        for i, p in enumerate(self.pivots):
            c = vv[p]
            coords.append(c)
            if c:
                row = self.basis.entries[i]
                for j in range(self.ambient_dim):
                    vv[j] -= c * row[j]
        if any(vv):
            return None
        return tuple(coords)


def member(s: Subspace, v: Sequence) -> bool:
    return s.coordinates(v) is not None


def kernel(a: RationalMatrix) -> Subspace:
    """Exact null space of a."""
    red, _, pivots = rref(a)
    pivot_set = set(pivots)
    free = [c for c in range(a.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red.entries[i][f]
        basis.append(v)
    return Subspace(a.cols, basis)


def solve(a: RationalMatrix, b: Sequence) -> Optional[Vector]:
    """One exact solution of a x = b, or None when inconsistent."""
    if len(b) != a.rows:
        raise DimensionMismatchError("rhs length != rows")
    bb = _frac_row(b)
    aug = RationalMatrix(
        [list(row) + [bb[i]] for i, row in enumerate(a.entries)],
        cols=a.cols + 1,
    )
    red, _, pivots = rref(aug)
    if a.cols in pivots:
        return None
    x = [Fraction(0)] * a.cols
    for i, p in enumerate(pivots):
        x[p] = red.entries[i][a.cols]
    return tuple(x)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection of two subspaces of the same ambient space."""
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")
    d = s1.ambient_dim
    if s1.dim == 0 or s2.dim == 0:
        return Subspace(d, [])
    stacked = RationalMatrix(
        list(s1.basis.entries) + list(s2.basis.entries), cols=d
    )
    null = kernel(stacked.transpose())
    vectors = []
    for u in null.basis.entries:
        vec = [Fraction(0)] * d
        for i in range(s1.dim):
            if u[i]:
                row = s1.basis.entries[i]
                for j in range(d):
                    vec[j] += u[i] * row[j]
        vectors.append(vec)
    return Subspace(d, vectors)


def restricted_trace(a: RationalMatrix, b: Subspace) -> Fraction:
    """Trace of a restricted to an invariant subspace.

    With basis vectors b_i as columns of B, this is the trace of the unique
    C satisfying A B^T = B^T C.  Raises NotInvariantError when some A b_i
    leaves the span, which signals a wrong candidate subspace.
    """
    if a.rows != a.cols or a.cols != b.ambient_dim:
        raise DimensionMismatchError("operator does not act on the ambient space")
    total = Fraction(0)
    for i in range(b.dim):
        image = a.matvec(b.basis.entries[i])
        coords = b.coordinates(image)
        if coords is None:
            raise NotInvariantError(f"image of basis vector {i} leaves the subspace")
        total += coords[i]
    return total
