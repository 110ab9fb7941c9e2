"""Dense immutable matrices over a coefficient ring.

A matrix over a ring R with q columns and p rows represents the R-linear
map R^q -> R^p whose columns are the images of the standard basis
vectors.  Entries are canonical ring elements; all operations are pure.
"""

from .errors import DimensionMismatchError, RingMismatchError


class Matrix:
    __slots__ = ("ring", "nrows", "ncols", "entries")

    def __init__(self, ring, nrows: int, ncols: int, entries):
        """``entries`` is a row-major nested sequence; values are normalized."""
        if nrows < 0 or ncols < 0:
            raise DimensionMismatchError("negative matrix dimensions")
        rows = tuple(tuple(ring.normalize(e) for e in row) for row in entries)
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise DimensionMismatchError(
                f"expected {nrows}x{ncols} entries, got {[len(r) for r in rows]}"
            )
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.entries = rows

    @classmethod
    def from_rows(cls, ring, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(ring, len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, ring, columns, nrows=None):
        columns = [list(c) for c in columns]
        if nrows is None:
            if not columns:
                raise DimensionMismatchError("nrows required for an empty column list")
            nrows = len(columns[0])
        rows = [[c[i] for c in columns] for i in range(nrows)]
        return cls(ring, nrows, len(columns), rows)

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        z = ring.zero
        return cls(ring, nrows, ncols, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero, ring.one
        return cls(ring, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    def row(self, i) -> tuple:
        return self.entries[i]

    def column(self, j) -> tuple:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, self.ncols, self.nrows,
                      [self.column(i) for i in range(self.ncols)])

    def map_entries(self, func, ring=None) -> "Matrix":
        """Apply ``func`` entrywise, optionally landing in a different ring."""
        target = ring if ring is not None else self.ring
        return Matrix(target, self.nrows, self.ncols,
                      [[func(e) for e in row] for row in self.entries])

    def _check_same_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        self._check_same_ring(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatchError("matrix addition shape mismatch")
        add = self.ring.add
        return Matrix(self.ring, self.nrows, self.ncols,
                      [[add(a, b) for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        neg = self.ring.neg
        return Matrix(self.ring, self.nrows, self.ncols,
                      [[neg(a) for a in row] for row in self.entries])

    def scale(self, c) -> "Matrix":
        mul = self.ring.mul
        return Matrix(self.ring, self.nrows, self.ncols,
                      [[mul(c, a) for a in row] for row in self.entries])

    def __matmul__(self, other):
        self._check_same_ring(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        ring = self.ring
        add, mul, zero = ring.add, ring.mul, ring.zero
        out = []
        for i in range(self.nrows):
            arow = self.entries[i]
            orow = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    acc = add(acc, mul(arow[k], other.entries[k][j]))
                orow.append(acc)
            out.append(orow)
        return Matrix(ring, self.nrows, other.ncols, out)

    def matvec(self, v) -> tuple:
        """Apply the matrix to a length-``ncols`` vector."""
        if len(v) != self.ncols:
            raise DimensionMismatchError(f"vector length {len(v)} != {self.ncols} columns")
        ring = self.ring
        add, mul, zero = ring.add, ring.mul, ring.zero
        out = []
        for row in self.entries:
            acc = zero
            for a, x in zip(row, v):
                acc = add(acc, mul(a, x))
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(e == z for row in self.entries for e in row)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.entries == other.entries
            and self.ncols == other.ncols
        )

    def __hash__(self):
        return hash((self.ring, self.nrows, self.ncols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(self.ring.format(e) for e in row) for row in self.entries
        )
        return f"Matrix({self.ring!r}, {self.nrows}x{self.ncols}: [{body}])"


def hstack(left: Matrix, right: Matrix) -> Matrix:
    if left.ring != right.ring:
        raise RingMismatchError("hstack over different rings")
    if left.nrows != right.nrows:
        raise DimensionMismatchError("hstack row-count mismatch")
    return Matrix(left.ring, left.nrows, left.ncols + right.ncols,
                  [ra + rb for ra, rb in zip(left.entries, right.entries)])


def vstack(top: Matrix, bottom: Matrix) -> Matrix:
    if top.ring != bottom.ring:
        raise RingMismatchError("vstack over different rings")
    if top.ncols != bottom.ncols:
        raise DimensionMismatchError("vstack column-count mismatch")
    return Matrix(top.ring, top.nrows + bottom.nrows, top.ncols,
                  top.entries + bottom.entries)
