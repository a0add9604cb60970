"""Exact linear algebra over the rationals.

Vectors are lists of ``Fraction``; matrices are lists of row vectors.
Elimination is fraction-free: rows are scaled to integers, and pivoting uses
the two-row cross-multiplication update with an exact division by the
previous pivot (Bareiss), which keeps intermediate entries bounded by minors
of the input instead of blowing up like naive rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = list[Fraction]
Matrix = list[list[Fraction]]


def _check_rectangular(m: Sequence[Sequence[Fraction]]) -> int:
    """Return the column count, raising on ragged input."""
    if not m:
        return 0
    cols = len(m[0])
    for row in m:
        if len(row) != cols:
            raise ValueError("matrix rows have inconsistent lengths")
    return cols


def _int_row(row: Iterable[Fraction | int]) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    frs = [Fraction(a) for a in row]
    scale = 1
    for a in frs:
        d = a.denominator
        scale = scale // gcd(scale, d) * d
    return [int(a * scale) for a in frs]


def _content_reduce(row: list[int]) -> None:
    """Divide an integer row by the gcd of its entries, in place."""
    g = 0
    for a in row:
        g = gcd(g, a)
        if g == 1:
            return
    if g > 1:
        for i, a in enumerate(row):
            row[i] = a // g


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("fraction-free elimination produced a non-exact division")
    return q


def _bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduce integer rows to echelon form in place.

    Returns the rows together with the list of pivot columns.  The update
    ``(piv*a[i][j] - a[i][c]*a[r][j]) / prev`` is exact by the Sylvester
    determinant identity, also when pivot columns are skipped.
    """
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        pr = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, n_rows):
            ric = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for j in range(c, n_cols):
                row_i[j] = _exact_div(piv * row_i[j] - ric * row_r[j], prev)
        prev = piv
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    """Exact rank of a rational matrix."""
    _check_rectangular(m)
    rows = [_int_row(row) for row in m]
    _, pivots = _bareiss_echelon(rows)
    return len(pivots)


def in_span(v: Sequence[Fraction], basis: Matrix) -> bool:
    """Whether ``v`` is a rational linear combination of the basis rows."""
    cols = _check_rectangular(basis)
    if basis and len(v) != cols:
        raise ValueError(f"vector length {len(v)} does not match basis width {cols}")
    rb = RowBasis(len(v))
    for row in basis:
        rb.insert(row)
    return rb.contains(v)


def solve_linear(a: Matrix, b: Sequence[Fraction]) -> Vector | None:
    """Solve ``a @ x = b`` exactly; return some solution or None if inconsistent.

    Free variables are set to zero, so the returned solution is deterministic.
    """
    n = _check_rectangular(a)
    if len(b) != len(a):
        raise ValueError(f"right-hand side length {len(b)} does not match row count {len(a)}")
    if not a:
        return []
    aug = [_int_row(list(row) + [bv]) for row, bv in zip(a, b)]
    rows, pivots = _bareiss_echelon(aug)
    if pivots and pivots[-1] == n:
        return None
    x: Vector = [Fraction(0)] * n
    for r in reversed(range(len(pivots))):
        c = pivots[r]
        s = Fraction(rows[r][n])
        for j in range(c + 1, n):
            if rows[r][j] and x[j]:
                s -= rows[r][j] * x[j]
        x[c] = s / rows[r][c]
    return x


def nullspace(a: Matrix) -> list[Vector]:
    """Basis of the right kernel of ``a``, one vector per free column."""
    n = _check_rectangular(a)
    if not a:
        return []
    rows = [_int_row(row) for row in a]
    rows, pivots = _bareiss_echelon(rows)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for fc in range(n):
        if fc in pivot_set:
            continue
        x: Vector = [Fraction(0)] * n
        x[fc] = Fraction(1)
        for r in reversed(range(len(pivots))):
            c = pivots[r]
            s = Fraction(0)
            for j in range(c + 1, n):
                if rows[r][j] and x[j]:
                    s -= rows[r][j] * x[j]
            x[c] = s / rows[r][c]
        basis.append(x)
    return basis


def reduce_vector(v: Sequence[Fraction], rows: Sequence[Sequence[Fraction]]) -> Vector:
    """Residual of ``v`` after elimination against echelon rows.

    ``rows`` must have strictly increasing positions of first nonzero entry;
    the residual is zero exactly when ``v`` lies in their span.
    """
    vec = [Fraction(a) for a in v]
    for row in rows:
        p = next((j for j, a in enumerate(row) if a), None)
        if p is None:
            continue
        if vec[p]:
            factor = vec[p] / row[p]
            for j in range(p, len(vec)):
                if row[j]:
                    vec[j] -= factor * row[j]
    return vec


def row_space_intersection(a: Matrix, b: Matrix) -> list[Vector]:
    """Basis of the intersection of the row spaces of ``a`` and ``b``.

    Solves ``alpha @ a = beta @ b`` by taking the kernel of the stacked
    transpose ``[a^T | -b^T]`` and mapping the alpha part back through ``a``.
    """
    if not a or not b:
        return []
    cols = _check_rectangular(a)
    if _check_rectangular(b) != cols:
        raise ValueError("row spaces live in different ambient dimensions")
    ra, rb_n = len(a), len(b)
    stacked = [
        [a[i][c] for i in range(ra)] + [-b[i][c] for i in range(rb_n)]
        for c in range(cols)
    ]
    out = RowBasis(cols)
    for combo in nullspace(stacked):
        vec = [Fraction(0)] * cols
        for i in range(ra):
            if combo[i]:
                for c in range(cols):
                    vec[c] += combo[i] * a[i][c]
        out.insert(vec)
    return out.reduced_rows()


class RowBasis:
    """Incrementally maintained row space with exact membership queries.

    Rows are stored as content-reduced integer vectors in echelon form
    (strictly increasing pivot positions); insertion and membership use
    fraction-free cross-multiplication.
    """

    def __init__(self, width: int):
        self.width = width
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _residual(self, vec: Sequence[Fraction | int]) -> list[int]:
        row = _int_row(vec)
        if len(row) != self.width:
            raise ValueError(f"vector length {len(row)} does not match width {self.width}")
        for stored, p in zip(self._rows, self._pivots):
            if row[p]:
                a, piv = row[p], stored[p]
                for j in range(self.width):
                    row[j] = piv * row[j] - a * stored[j]
                _content_reduce(row)
        return row

    def insert(self, vec: Sequence[Fraction | int]) -> bool:
        """Add a vector; return True if it enlarged the span."""
        row = self._residual(vec)
        pivot = next((j for j, a in enumerate(row) if a), None)
        if pivot is None:
            return False
        if row[pivot] < 0:
            row = [-a for a in row]
        at = next((k for k, p in enumerate(self._pivots) if p > pivot), len(self._pivots))
        self._rows.insert(at, row)
        self._pivots.insert(at, pivot)
        return True

    def contains(self, vec: Sequence[Fraction | int]) -> bool:
        return not any(self._residual(vec))

    def reduced_rows(self) -> Matrix:
        """Canonical reduced echelon basis (pivot entries 1, zeros above)."""
        rows = [[Fraction(a) for a in row] for row in self._rows]
        for k in reversed(range(len(rows))):
            p = self._pivots[k]
            piv = rows[k][p]
            rows[k] = [a / piv for a in rows[k]]
            for i in range(k):
                f = rows[i][p]
                if f:
                    rows[i] = [a - f * bk for a, bk in zip(rows[i], rows[k])]
        return rows
