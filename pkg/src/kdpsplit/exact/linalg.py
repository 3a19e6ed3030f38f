"""Exact rank, nullspace and determinant.

Constant matrices are reduced with Bareiss' fraction-free elimination: every
intermediate entry is a minor of the input, so entry growth stays polynomial
and each division is exact.  Polynomial determinants use Laplace expansion
memoised on column subsets, which needs no polynomial division at all.
"""

from __future__ import annotations

from typing import Sequence

from .gaussian import ONE, ZERO, GaussianRational
from .matrix import PolyMatrix
from .poly import Poly


def _as_constant_rows(a) -> list[list[GaussianRational]]:
    if isinstance(a, PolyMatrix):
        if not a.is_constant():
            raise ValueError("nullspace needs a matrix with constant (degree-0) entries")
        return a.constant_rows()
    return [[GaussianRational.coerce(x) for x in r] for r in a]


def bareiss_echelon(rows: list[list[GaussianRational]]) -> tuple[list[list[GaussianRational]], list[int]]:
    """Row echelon form by fraction-free elimination; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: list[int] = []
    prev = ONE
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, n_rows):
            f = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, n_cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) / prev
            row_i[c] = ZERO
        # rows above the pivot row are left alone; a zero column keeps prev
        prev = p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a) -> int:
    rows = _as_constant_rows(a)
    if not rows:
        return 0
    return len(bareiss_echelon(rows)[1])


def nullspace(a) -> list[list[GaussianRational]]:
    """Basis of ``{v : A v = 0}``, one vector per free column.

    Each basis vector has a 1 in its free column and zeros in the other free
    columns, so the basis is canonical for a given matrix.
    """
    rows = _as_constant_rows(a)
    n_cols = len(rows[0])
    echelon, pivots = bareiss_echelon(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n_cols
        v[f] = ONE
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = ZERO
            row = echelon[r]
            for j in range(c + 1, n_cols):
                if row[j] and v[j]:
                    s = s + row[j] * v[j]
            v[c] = -s / row[c]
        basis.append(v)
    return basis


def mat_vec(rows: Sequence[Sequence[GaussianRational]], v: Sequence[GaussianRational]) -> list[GaussianRational]:
    out = []
    for r in rows:
        s = ZERO
        for a, x in zip(r, v):
            if a and x:
                s = s + a * x
        out.append(s)
    return out


def determinant(a: PolyMatrix) -> Poly:
    """Exact determinant by row-wise Laplace expansion memoised on column sets."""
    if a.rows != a.cols:
        raise ValueError(f"determinant of non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    table = a.table
    if a.is_constant():
        return Poly.const(table, _constant_det(a.constant_rows()))
    memo: dict[int, Poly] = {}
    entries = a.entries

    def minor(row: int, cols_mask: int) -> Poly:
        # det of rows row..n-1 restricted to the columns in cols_mask
        if row == n:
            return Poly.const(table, 1)
        hit = memo.get(cols_mask)
        if hit is not None:
            return hit
        total = Poly(table)
        sign = 1
        for c in range(n):
            if not cols_mask >> c & 1:
                continue
            e = entries[row][c]
            if e:
                sub = minor(row + 1, cols_mask & ~(1 << c))
                if sub:
                    total = total + e * sub if sign > 0 else total - e * sub
            sign = -sign
        memo[cols_mask] = total
        return total

    return minor(0, (1 << n) - 1)


def _constant_det(rows: list[list[GaussianRational]]) -> GaussianRational:
    m = [list(r) for r in rows]
    n = len(m)
    det = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        p = m[c][c]
        det = det * p
        inv = p.inverse()
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if f:
                for j in range(c, n):
                    m[i][j] = m[i][j] - f * m[c][j]
    return det
