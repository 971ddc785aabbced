"""Exact dense matrices over the package's scalar types.

A :class:`Matrix` carries its shape explicitly (zero-row and
zero-column matrices occur constantly as boundaries of ranked chain
complexes), stores entries as a tuple of row tuples, and works for any
entry type with field arithmetic and ``is_zero`` -- in practice
GaussRat and RatFunc.

Elimination routines use exact division, no pivot-size heuristics:
the first nonzero candidate in scan order is the pivot, which keeps
every computation deterministic.
"""

from __future__ import annotations

__all__ = ["Matrix"]


class Matrix:
    """Immutable rows-of-tuples matrix with explicit shape."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged matrix rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols disagrees with row width")
            ncols = width
        elif ncols is None:
            raise ValueError("empty matrix needs an explicit column count")
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int, zero) -> "Matrix":
        return cls([[zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int, one, zero) -> "Matrix":
        return cls(
            [[one if j == k else zero for k in range(n)] for j in range(n)], n
        )

    @classmethod
    def diagonal(cls, entries, zero) -> "Matrix":
        entries = list(entries)
        n = len(entries)
        return cls(
            [[entries[j] if j == k else zero for k in range(n)] for j in range(n)],
            n,
        )

    @classmethod
    def block_diagonal(cls, a: "Matrix", b: "Matrix", zero) -> "Matrix":
        rows = []
        for r in a.rows:
            rows.append(list(r) + [zero] * b.ncols)
        for r in b.rows:
            rows.append([zero] * a.ncols + list(r))
        return cls(rows, a.ncols + b.ncols)

    # -- access -------------------------------------------------------

    def __getitem__(self, jk):
        j, k = jk
        return self.rows[j][k]

    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def entries(self):
        for row in self.rows:
            yield from row

    def _any_entry(self):
        for row in self.rows:
            for e in row:
                return e
        raise ValueError("matrix has no entries")

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        return Matrix(
            [[self.rows[j][k] for k in col_idx] for j in row_idx], len(col_idx)
        )

    # -- plain algebra -------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape() != other.shape():
            raise ValueError("shape mismatch in matrix addition")
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape() != other.shape():
            raise ValueError("shape mismatch in matrix subtraction")
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def __neg__(self) -> "Matrix":
        return self.map(lambda e: -e)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        if self.nrows == 0:
            return Matrix([], other.ncols)
        if other.ncols == 0:
            return Matrix([[] for _ in range(self.nrows)], 0)
        if self.ncols == 0:
            # sum over an empty index set: need a zero of the right type
            raise ValueError(
                "product over an empty inner dimension has no entry type; "
                "use mul_with_zero"
            )
        out = []
        bt = list(zip(*other.rows))
        for ra in self.rows:
            out.append([_dot(ra, cb) for cb in bt])
        return Matrix(out, other.ncols)

    def mul_with_zero(self, other: "Matrix", zero) -> "Matrix":
        """Matrix product that also works across zero inner dimension."""
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        if self.ncols == 0:
            return Matrix.zeros(self.nrows, other.ncols, zero)
        if self.nrows == 0 or other.ncols == 0:
            return Matrix.zeros(self.nrows, other.ncols, zero)
        return self @ other

    def scale(self, c) -> "Matrix":
        return self.map(lambda e: e * c)

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(e) for e in row] for row in self.rows], self.ncols)

    def transpose(self) -> "Matrix":
        if self.nrows == 0 or self.ncols == 0:
            return Matrix([[] for _ in range(self.ncols)] if self.nrows == 0 else [],
                          self.nrows)
        return Matrix(list(zip(*self.rows)), self.nrows)

    def conj(self) -> "Matrix":
        return self.map(lambda e: e.conj())

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    # -- elimination ---------------------------------------------------

    def rank(self) -> int:
        """Rank over the entry field, by exact Gaussian elimination."""
        work = [list(r) for r in self.rows]
        nr, nc = self.nrows, self.ncols
        rank = 0
        for col in range(nc):
            pivot_row = None
            for j in range(rank, nr):
                if not work[j][col].is_zero():
                    pivot_row = j
                    break
            if pivot_row is None:
                continue
            work[rank], work[pivot_row] = work[pivot_row], work[rank]
            pivot = work[rank][col]
            for j in range(rank + 1, nr):
                factor = work[j][col]
                if factor.is_zero():
                    continue
                ratio = factor / pivot
                row_j, row_p = work[j], work[rank]
                for k in range(col, nc):
                    row_j[k] = row_j[k] - ratio * row_p[k]
            rank += 1
            if rank == nr:
                break
        return rank

    def pivot_columns(self, col_order=None) -> list[int]:
        """Columns picked as pivots when scanning in ``col_order``.

        Returns the selected column indices (in scan order); their count
        is the rank, and the corresponding column submatrix has full
        column rank.  Deterministic for a fixed order.
        """
        order = list(range(self.ncols)) if col_order is None else list(col_order)
        work = [list(r) for r in self.rows]
        nr = self.nrows
        rank = 0
        picked = []
        for col in order:
            pivot_row = None
            for j in range(rank, nr):
                if not work[j][col].is_zero():
                    pivot_row = j
                    break
            if pivot_row is None:
                continue
            work[rank], work[pivot_row] = work[pivot_row], work[rank]
            pivot = work[rank][col]
            for j in range(rank + 1, nr):
                factor = work[j][col]
                if factor.is_zero():
                    continue
                ratio = factor / pivot
                row_j, row_p = work[j], work[rank]
                for k in range(self.ncols):
                    row_j[k] = row_j[k] - ratio * row_p[k]
            picked.append(col)
            rank += 1
            if rank == nr:
                break
        return picked

    def det(self):
        """Determinant of a square matrix with at least one entry."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            raise ValueError("0x0 determinant needs an explicit one; see caller")
        work = [list(r) for r in self.rows]
        n = self.nrows
        sample = work[0][0]
        det = sample.__class__.one()
        sign_flip = False
        for col in range(n):
            pivot_row = None
            for j in range(col, n):
                if not work[j][col].is_zero():
                    pivot_row = j
                    break
            if pivot_row is None:
                return sample.__class__.zero()
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                sign_flip = not sign_flip
            pivot = work[col][col]
            det = det * pivot
            for j in range(col + 1, n):
                factor = work[j][col]
                if factor.is_zero():
                    continue
                ratio = factor / pivot
                row_j, row_p = work[j], work[col]
                for k in range(col, n):
                    row_j[k] = row_j[k] - ratio * row_p[k]
        return -det if sign_flip else det

    def inverse(self) -> "Matrix":
        """Inverse of a nonsingular square matrix (Gauss-Jordan)."""
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        if n == 0:
            return Matrix([], 0)
        sample = self.rows[0][0]
        one = sample.__class__.one()
        zero = sample.__class__.zero()
        work = [
            list(self.rows[j]) + [one if k == j else zero for k in range(n)]
            for j in range(n)
        ]
        for col in range(n):
            pivot_row = None
            for j in range(col, n):
                if not work[j][col].is_zero():
                    pivot_row = j
                    break
            if pivot_row is None:
                raise ValueError("matrix is singular")
            work[col], work[pivot_row] = work[pivot_row], work[col]
            pivot = work[col][col]
            inv_p = one / pivot
            work[col] = [e * inv_p for e in work[col]]
            for j in range(n):
                if j == col:
                    continue
                factor = work[j][col]
                if factor.is_zero():
                    continue
                row_j, row_c = work[j], work[col]
                for k in range(2 * n):
                    row_j[k] = row_j[k] - factor * row_c[k]
        return Matrix([row[n:] for row in work], n)

    def kernel_basis(self) -> "Matrix":
        """Columns spanning the right kernel over the entry field."""
        if self.ncols == 0:
            return Matrix([], 0)
        if self.nrows == 0:
            # everything is in the kernel; need an entry type for 1/0
            raise ValueError("kernel of an empty-row matrix needs entry type")
        sample = self.rows[0][0]
        one = sample.__class__.one()
        zero = sample.__class__.zero()
        # reduced row echelon form
        work = [list(r) for r in self.rows]
        nr, nc = self.nrows, self.ncols
        pivots = []
        rank = 0
        for col in range(nc):
            pivot_row = None
            for j in range(rank, nr):
                if not work[j][col].is_zero():
                    pivot_row = j
                    break
            if pivot_row is None:
                continue
            work[rank], work[pivot_row] = work[pivot_row], work[rank]
            pivot = work[rank][col]
            inv_p = one / pivot
            work[rank] = [e * inv_p for e in work[rank]]
            for j in range(nr):
                if j == rank:
                    continue
                factor = work[j][col]
                if factor.is_zero():
                    continue
                row_j, row_p = work[j], work[rank]
                for k in range(nc):
                    row_j[k] = row_j[k] - factor * row_p[k]
            pivots.append(col)
            rank += 1
            if rank == nr:
                break
        free = [c for c in range(nc) if c not in pivots]
        cols = []
        for fcol in free:
            vec = [zero] * nc
            vec[fcol] = one
            for prow, pcol in enumerate(pivots):
                vec[pcol] = -work[prow][fcol]
            cols.append(vec)
        if not cols:
            return Matrix([[] for _ in range(nc)], 0)
        return Matrix(list(zip(*cols)), len(cols))

    # -- comparison ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape() == other.shape() and self.rows == other.rows

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"


def _dot(row, col):
    it = zip(row, col)
    a, b = next(it)
    acc = a * b
    for a, b in it:
        acc = acc + a * b
    return acc
