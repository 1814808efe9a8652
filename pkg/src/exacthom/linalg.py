"""Exact linear algebra over the integers.

Everything works with Python's arbitrary-precision ints; there is no floating
point and no fixed-width fast path. Matrices are immutable value objects, and
zero-dimensional matrices (0 rows or 0 columns) are legal inputs everywhere.

Conventions:
  * matrices act on column vectors, so a matrix with r rows and c columns is
    a map Z^c -> Z^r and its columns are the images of the source basis;
  * snf(a) returns (u, d, v) with u*a*v = d, u and v unimodular, d diagonal
    with nonnegative entries forming a divisibility chain d1 | d2 | ...;
  * hnf(a) is the column-style Hermite normal form of the column lattice of
    a: pivots positive and strictly descending, the entries to the left of a
    pivot in its row reduced into [0, pivot), zero columns removed;
  * kernel_basis(a) returns a matrix whose columns are a basis of the full
    kernel lattice {x : a*x = 0} (saturated by construction).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InputError

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "snf",
    "smith_diagonal",
    "hnf",
    "kernel_basis",
    "solve",
    "det",
    "hstack",
    "vstack",
]


@dataclass(frozen=True)
class IntMatrix:
    """An immutable rows x cols integer matrix stored as a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise InputError("row count does not match declared shape")
        for row in self.entries:
            if len(row) != self.cols:
                raise InputError("row length does not match declared shape")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: Optional[int] = None) -> "IntMatrix":
        grid = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            if not grid:
                raise InputError("cols is required for a matrix with no rows")
            cols = len(grid[0])
        return cls(len(grid), cols, grid)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: Optional[int] = None, cols: Optional[int] = None) -> "IntMatrix":
        values = [int(v) for v in values]
        if rows is None:
            rows = len(values)
        if cols is None:
            cols = len(values)
        if len(values) > min(rows, cols):
            raise InputError("too many diagonal values for the requested shape")
        grid = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            grid[i][i] = v
        return cls.from_rows(grid, cols=cols)

    @classmethod
    def column(cls, values: Sequence[int]) -> "IntMatrix":
        return cls(len(values), 1, tuple((int(v),) for v in values))

    # -- accessors ---------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def column_tuple(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self.entries[i][j] for j in col_idx] for i in row_idx], cols=len(col_idx)
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise InputError("matrix addition requires equal shapes")
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise InputError("matrix subtraction requires equal shapes")
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        # Row-sparse view of the right factor: products of the sparse matrices
        # built elsewhere in the package dominate, and skipping zeros there
        # changes the constant factor by orders of magnitude.
        sparse_rows = [
            [(j, v) for j, v in enumerate(row) if v] for row in other.entries
        ]
        out = [[0] * other.cols for _ in range(self.rows)]
        for i, arow in enumerate(self.entries):
            orow = out[i]
            for k, a in enumerate(arow):
                if a:
                    if a == 1:
                        for j, b in sparse_rows[k]:
                            orow[j] += b
                    elif a == -1:
                        for j, b in sparse_rows[k]:
                            orow[j] -= b
                    else:
                        for j, b in sparse_rows[k]:
                            orow[j] += a * b
        return IntMatrix(self.rows, other.cols, tuple(tuple(r) for r in out))

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"<empty {self.rows}x{self.cols}>"
        text = [[str(x) for x in row] for row in self.entries]
        widths = [max(len(text[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        return "\n".join(
            "[" + "  ".join(t.rjust(w) for t, w in zip(row, widths)) + "]" for row in text
        )


@dataclass(frozen=True)
class SmithDecomposition:
    """A Smith normal form u*a*v = d with u, v unimodular."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def __post_init__(self) -> None:
        if self.u.rows != self.u.cols or self.u.rows != self.d.rows:
            raise InputError("u must be square with the same row count as d")
        if self.v.rows != self.v.cols or self.v.cols != self.d.cols:
            raise InputError("v must be square with the same column count as d")
        diag = self.diagonal
        for i, row in enumerate(self.d.entries):
            for j, x in enumerate(row):
                if i != j and x:
                    raise InputError("d must be diagonal")
        seen_zero = False
        for i, x in enumerate(diag):
            if x < 0:
                raise InputError("diagonal entries must be nonnegative")
            if x == 0:
                seen_zero = True
            elif seen_zero:
                raise InputError("zero diagonal entries must trail the nonzero ones")
            if i > 0 and diag[i - 1] and x % diag[i - 1]:
                raise InputError("diagonal entries must form a divisibility chain")

    @property
    def diagonal(self) -> tuple[int, ...]:
        n = min(self.d.rows, self.d.cols)
        return tuple(self.d.entries[i][i] for i in range(n))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)


class _EntrySwell(Exception):
    """Internal: the integral elimination is blowing up, switch strategies."""


def _smith_engine(a: IntMatrix, want_u: bool, want_v: bool, bit_cap: int = 0):
    """Diagonalize a by unimodular row/column operations.

    Returns (diag, u_rows, vt_rows) where diag has length min(rows, cols),
    u_rows are the rows of u, and vt_rows are the *columns* of v stored as
    rows (so column operations on the working matrix are row operations on
    vt_rows). u_rows / vt_rows are None when not requested.

    A positive bit_cap raises _EntrySwell once any remaining entry outgrows
    it; callers that need only the diagonal use this to bail out of the rare
    inputs where elimination entries grow doubly exponentially.
    """
    m, n = a.rows, a.cols
    d = a.to_lists()
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)] if want_u else None
    vt = [[1 if i == j else 0 for j in range(n)] for i in range(n)] if want_v else None

    def row_sub(i: int, t: int, q: int) -> None:
        if q == 1:
            d[i] = [x - y for x, y in zip(d[i], d[t])]
            if u is not None:
                u[i] = [x - y for x, y in zip(u[i], u[t])]
        elif q == -1:
            d[i] = [x + y for x, y in zip(d[i], d[t])]
            if u is not None:
                u[i] = [x + y for x, y in zip(u[i], u[t])]
        else:
            d[i] = [x - q * y for x, y in zip(d[i], d[t])]
            if u is not None:
                u[i] = [x - q * y for x, y in zip(u[i], u[t])]

    def row_add(i: int, t: int) -> None:
        d[i] = [x + y for x, y in zip(d[i], d[t])]
        if u is not None:
            u[i] = [x + y for x, y in zip(u[i], u[t])]

    def col_sub(j: int, t: int, q: int, from_row: int) -> None:
        if q == 1:
            for r in range(from_row, m):
                row = d[r]
                x = row[t]
                if x:
                    row[j] -= x
        elif q == -1:
            for r in range(from_row, m):
                row = d[r]
                x = row[t]
                if x:
                    row[j] += x
        else:
            for r in range(from_row, m):
                row = d[r]
                x = row[t]
                if x:
                    row[j] -= q * x
        if vt is not None:
            if q == 1:
                vt[j] = [x - y for x, y in zip(vt[j], vt[t])]
            elif q == -1:
                vt[j] = [x + y for x, y in zip(vt[j], vt[t])]
            else:
                vt[j] = [x - q * y for x, y in zip(vt[j], vt[t])]

    def swap_rows(i: int, t: int) -> None:
        d[i], d[t] = d[t], d[i]
        if u is not None:
            u[i], u[t] = u[t], u[i]

    def swap_cols(j: int, t: int) -> None:
        for row in d:
            row[j], row[t] = row[t], row[j]
        if vt is not None:
            vt[j], vt[t] = vt[t], vt[j]

    def negate_row(t: int) -> None:
        d[t] = [-x for x in d[t]]
        if u is not None:
            u[t] = [-x for x in u[t]]

    def negate_col(t: int) -> None:
        for row in d:
            row[t] = -row[t]
        if vt is not None:
            vt[t] = [-x for x in vt[t]]

    limit = min(m, n)
    t = 0
    while t < limit:
        # Smallest-nonzero-absolute-value pivot, short-circuiting on a unit.
        best = 0
        pi = pj = -1
        for i in range(t, m):
            row = d[i]
            for j in range(t, n):
                x = row[j]
                if x:
                    ax = -x if x < 0 else x
                    if best == 0 or ax < best:
                        best, pi, pj = ax, i, j
                        if ax == 1:
                            break
            if best == 1:
                break
        if pi < 0:
            break  # the remaining submatrix is zero
        if pi != t:
            swap_rows(pi, t)
        if pj != t:
            swap_cols(pj, t)

        while True:
            if d[t][t] < 0:
                negate_row(t)
            # Column phase: Euclidean reduction below the pivot. Quotients
            # are rounded to nearest, keeping |remainder| <= pivot/2; without
            # this the transform rows can swell exponentially on inputs a few
            # hundred columns wide.
            again = True
            while again:
                again = False
                p = d[t][t]
                for i in range(t + 1, m):
                    x = d[i][t]
                    if x:
                        q = (x + (p >> 1)) // p
                        if q:
                            row_sub(i, t, q)
                        if d[i][t]:  # remainder becomes the new, smaller pivot
                            swap_rows(i, t)
                            if d[t][t] < 0:
                                negate_row(t)
                            p = d[t][t]
                            again = True
            # Row phase: Euclidean reduction right of the pivot. A column
            # swap here can reintroduce entries below the pivot, which the
            # outer loop detects and clears.
            again = True
            while again:
                again = False
                p = d[t][t]
                row_t = d[t]
                for j in range(t + 1, n):
                    x = row_t[j]
                    if x:
                        q = (x + (p >> 1)) // p
                        if q:
                            col_sub(j, t, q, t)
                        if row_t[j]:
                            swap_cols(j, t)
                            if row_t[t] < 0:
                                negate_col(t)
                            p = row_t[t]
                            again = True
            if any(d[i][t] for i in range(t + 1, m)):
                continue
            # Divisibility enforcement: the pivot must divide the remaining
            # submatrix so the diagonal chains; fold an offending row in and
            # re-run the reduction (the pivot gcd strictly decreases).
            p = d[t][t]
            bad = -1
            if p != 1:
                for i in range(t + 1, m):
                    row = d[i]
                    for j in range(t + 1, n):
                        if row[j] % p:
                            bad = i
                            break
                    if bad >= 0:
                        break
            if bad < 0:
                break
            row_add(t, bad)
        t += 1
        if bit_cap and any(
            x.bit_length() > bit_cap for row in d[t:] for x in row[t:] if x
        ):
            raise _EntrySwell

    diag = [d[i][i] for i in range(limit)]
    return diag, u, vt


def _bareiss_rank_minor(a: IntMatrix) -> tuple[int, int]:
    """The rank of a and a nonzero rank x rank minor, by fraction-free
    elimination with full pivoting.

    Every intermediate entry is itself a minor of a, so nothing here can
    swell past the Hadamard bound; the returned minor is the last pivot.
    """
    m, n = a.rows, a.cols
    d = a.to_lists()
    prev = 1
    r = 0
    limit = min(m, n)
    while r < limit:
        best = 0
        pi = pj = -1
        for i in range(r, m):
            row = d[i]
            for j in range(r, n):
                x = row[j]
                if x:
                    ax = -x if x < 0 else x
                    if best == 0 or ax < best:
                        best, pi, pj = ax, i, j
        if pi < 0:
            break
        if pi != r:
            d[pi], d[r] = d[r], d[pi]
        if pj != r:
            for row in d:
                row[pj], row[r] = row[r], row[pj]
        pivot = d[r][r]
        for i in range(r + 1, m):
            row = d[i]
            f = row[r]
            prow = d[r]
            for j in range(r + 1, n):
                row[j] = (row[j] * pivot - f * prow[j]) // prev
            row[r] = 0
        prev = pivot
        r += 1
    return r, abs(prev) if r else 1


def _smith_diagonal_bounded(a: IntMatrix) -> tuple[int, ...]:
    """Smith diagonal via elimination modulo a maximal nonzero minor.

    With D that minor, every invariant factor of a divides D, and the
    lattice spanned by the columns of a together with D*Z^rows is unchanged
    by reducing any entry mod D (that is a column operation against the
    D*Z^rows part, which row operations preserve). Eliminating with all
    entries kept in balanced residues therefore terminates with entries
    bounded by D/2, and Z^rows / lattice = (+) Z/gcd(pivot, D) (+) copies of
    Z/D; dropping rows - rank copies of D from that chain leaves exactly the
    nonzero invariant factors of a.
    """
    rank, minor = _bareiss_rank_minor(a)
    limit = min(a.rows, a.cols)
    if rank == 0:
        return (0,) * limit
    if minor == 1:  # some rank x rank minor is a unit: all factors are 1
        return (1,) * rank + (0,) * (limit - rank)
    big_d = minor
    half = big_d >> 1

    def reduce_mod(x: int) -> int:
        r = x % big_d
        return r - big_d if r > half else r

    m, n = a.rows, a.cols
    d = [[reduce_mod(x) for x in row] for row in a.entries]
    pivots: list[int] = []
    t = 0
    while t < min(m, n):
        best = 0
        pi = pj = -1
        for i in range(t, m):
            row = d[i]
            for j in range(t, n):
                x = row[j]
                if x:
                    ax = -x if x < 0 else x
                    if best == 0 or ax < best:
                        best, pi, pj = ax, i, j
                        if ax == 1:
                            break
            if best == 1:
                break
        if pi < 0:
            break
        if pi != t:
            d[pi], d[t] = d[t], d[pi]
        if pj != t:
            for row in d:
                row[pj], row[t] = row[t], row[pj]
        while True:
            if d[t][t] < 0:
                d[t] = [-x for x in d[t]]
            again = True
            while again:
                again = False
                p = d[t][t]
                for i in range(t + 1, m):
                    x = d[i][t]
                    if x:
                        q = (x + (p >> 1)) // p
                        if q:
                            d[i] = [reduce_mod(u - q * v) for u, v in zip(d[i], d[t])]
                        if d[i][t]:
                            d[i], d[t] = d[t], d[i]
                            if d[t][t] < 0:
                                d[t] = [-x for x in d[t]]
                            p = d[t][t]
                            again = True
            again = True
            while again:
                again = False
                p = d[t][t]
                row_t = d[t]
                for j in range(t + 1, n):
                    x = row_t[j]
                    if x:
                        q = (x + (p >> 1)) // p
                        if q:
                            for r_ in range(t, m):
                                row = d[r_]
                                if row[t]:
                                    row[j] = reduce_mod(row[j] - q * row[t])
                        if row_t[j]:
                            for row in d:
                                row[j], row[t] = row[t], row[j]
                            if row_t[t] < 0:
                                for row in d:
                                    row[t] = -row[t]
                            p = row_t[t]
                            again = True
            if any(d[i][t] for i in range(t + 1, m)):
                continue
            p = d[t][t]
            bad = -1
            if p != 1:
                for i in range(t + 1, m):
                    row = d[i]
                    for j in range(t + 1, n):
                        if row[j] % p:
                            bad = i
                            break
                    if bad >= 0:
                        break
            if bad < 0:
                break
            d[t] = [reduce_mod(u + v) for u, v in zip(d[t], d[bad])]
        pivots.append(d[t][t])
        t += 1

    values = [math.gcd(p, big_d) for p in pivots]
    values += [big_d] * (m - len(values))
    # pairwise gcd/lcm passes turn a diagonal into its invariant chain
    changed = True
    while changed:
        changed = False
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                if values[j] % values[i]:
                    g = math.gcd(values[i], values[j])
                    values[i], values[j] = g, values[i] * values[j] // g
                    changed = True
    return tuple(values[:rank]) + (0,) * (limit - rank)


def snf(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form of a: u*a*v = d with u, v unimodular."""
    diag, u, vt = _smith_engine(a, want_u=True, want_v=True)
    d = IntMatrix.diagonal(diag, rows=a.rows, cols=a.cols)
    u_mat = IntMatrix.from_rows(u, cols=a.rows) if a.rows else IntMatrix.zeros(0, 0)
    v_mat = (
        IntMatrix.from_rows(vt, cols=a.cols).transpose() if a.cols else IntMatrix.zeros(0, 0)
    )
    return SmithDecomposition(u_mat, d, v_mat)


def smith_diagonal(a: IntMatrix) -> tuple[int, ...]:
    """The diagonal of the Smith normal form, without the transforms.

    Runs the integral elimination first and, on the rare inputs where its
    entries snowball, switches to the bounded modular route; the answer is
    identical either way and no input can make this blow up.
    """
    cap = 96 + 16 * max(
        (abs(x).bit_length() for row in a.entries for x in row), default=0
    )
    try:
        diag, _, _ = _smith_engine(a, want_u=False, want_v=False, bit_cap=cap)
    except _EntrySwell:
        return _smith_diagonal_bounded(a)
    return tuple(diag)


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """A basis of the kernel lattice {x in Z^cols : a*x = 0}.

    The columns of the result are the basis; there are cols - rank(a) of
    them, and the lattice they span is saturated (any integer vector killed
    by a is an integer combination of the columns).
    """
    diag, _, vt = _smith_engine(a, want_u=False, want_v=True)
    rank = sum(1 for x in diag if x)
    n = a.cols
    kernel_cols = [vt[i] for i in range(rank, n)]
    return IntMatrix.from_rows(
        [[col[i] for col in kernel_cols] for i in range(n)], cols=len(kernel_cols)
    )


def solve(a: IntMatrix, b: IntMatrix) -> Optional[IntMatrix]:
    """An integer solution x of a*x = b, or None when there is none.

    b may have several columns; they are solved simultaneously. The shapes
    must agree (a.rows == b.rows) or the call is rejected.
    """
    if a.rows != b.rows:
        raise InputError(f"cannot solve: a has {a.rows} rows but b has {b.rows}")
    diag, u, vt = _smith_engine(a, want_u=True, want_v=True)
    u_mat = IntMatrix.from_rows(u, cols=a.rows) if a.rows else IntMatrix.zeros(0, 0)
    c = u_mat @ b
    rank = sum(1 for x in diag if x)
    y = [[0] * b.cols for _ in range(a.cols)]
    for i in range(rank):
        p = diag[i]
        crow = c.entries[i]
        yrow = y[i]
        for j, value in enumerate(crow):
            q, r = divmod(value, p)
            if r:
                return None
            yrow[j] = q
    for i in range(rank, a.rows):
        if any(c.entries[i]):
            return None
    v_mat = IntMatrix.from_rows(vt, cols=a.cols).transpose() if a.cols else IntMatrix.zeros(0, 0)
    return v_mat @ IntMatrix.from_rows(y, cols=b.cols)


def hnf(a: IntMatrix) -> IntMatrix:
    """Column-style Hermite normal form of the column lattice of a.

    Pivots are positive and strictly descend row by row, entries to the left
    of a pivot in its row lie in [0, pivot), and zero columns are removed, so
    two matrices have equal column lattices iff their forms are identical.
    """
    m, n = a.rows, a.cols
    d = a.to_lists()

    def col_sub(j: int, t: int, q: int) -> None:
        for row in d:
            x = row[t]
            if x:
                row[j] -= q * x

    def swap_cols(j: int, t: int) -> None:
        for row in d:
            row[j], row[t] = row[t], row[j]

    t = 0
    for i in range(m):
        if t >= n:
            break
        row = d[i]
        # Euclidean reduction across columns t.. to put gcd at column t.
        while True:
            best = 0
            pj = -1
            for j in range(t, n):
                x = row[j]
                if x:
                    ax = -x if x < 0 else x
                    if best == 0 or ax < best:
                        best, pj = ax, j
                        if ax == 1:
                            break
            if pj < 0:
                break
            if pj != t:
                swap_cols(pj, t)
            if row[t] < 0:
                for r in d:
                    r[t] = -r[t]
            clean = True
            p = row[t]
            for j in range(t + 1, n):
                x = row[j]
                if x:
                    q = (x + (p >> 1)) // p  # nearest quotient limits growth
                    if q:
                        col_sub(j, t, q)
                    if row[j]:
                        clean = False
            if clean:
                break
        if t < n and row[t]:
            p = row[t]
            for j in range(t):
                q = row[j] // p
                if q:
                    col_sub(j, t, q)
            t += 1
    return IntMatrix.from_rows([r[:t] for r in d], cols=t)


def det(a: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise InputError("determinant requires a square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[i], m[k] = m[k], m[i]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mk = m[k]
            factor = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - factor * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def hstack(blocks: Sequence[IntMatrix]) -> IntMatrix:
    """Concatenate matrices left to right (equal row counts required)."""
    if not blocks:
        raise InputError("hstack requires at least one block")
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise InputError("hstack blocks must share their row count")
    grid = [sum((list(b.entries[i]) for b in blocks), []) for i in range(rows)]
    return IntMatrix.from_rows(grid, cols=sum(b.cols for b in blocks))


def vstack(blocks: Sequence[IntMatrix]) -> IntMatrix:
    """Concatenate matrices top to bottom (equal column counts required)."""
    if not blocks:
        raise InputError("vstack requires at least one block")
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise InputError("vstack blocks must share their column count")
    grid = [row for b in blocks for row in b.entries]
    return IntMatrix.from_rows(grid, cols=cols)
