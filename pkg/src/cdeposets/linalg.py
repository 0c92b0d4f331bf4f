"""Exact rational Gaussian elimination: solve, rank, nullspace.

Everything works over Fraction; no pivoting heuristics are needed since
there is no roundoff.  Matrices are lists of row lists.
"""

from __future__ import annotations

from fractions import Fraction


def _echelon(rows):
    """Row-reduce in place; returns list of (row_index, pivot_col)."""
    pivots = []
    r = 0
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    for c in range(n_cols):
        pivot = None
        for i in range(r, n_rows):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
        if r == n_rows:
            break
    return pivots


def solve(matrix, rhs):
    """One solution of A x = b over the rationals, or None if inconsistent."""
    n_rows = len(matrix)
    if n_rows == 0:
        return []
    n_cols = len(matrix[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivots = _echelon(aug)
    pivot_cols = {c for _, c in pivots}
    if n_cols in pivot_cols:
        return None
    sol = [Fraction(0)] * n_cols
    for r, c in pivots:
        sol[c] = aug[r][n_cols]
    return sol


def nullspace(matrix):
    """Basis of the right nullspace of A (list of Fraction vectors)."""
    n_rows = len(matrix)
    if n_rows == 0:
        return []
    n_cols = len(matrix[0])
    rows = [[Fraction(x) for x in row] for row in matrix]
    pivots = _echelon(rows)
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(n_cols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r, c in pivots:
            v[c] = -rows[r][fc]
        basis.append(v)
    return basis


def rank(matrix) -> int:
    if not matrix:
        return 0
    rows = [[Fraction(x) for x in row] for row in matrix]
    return len(_echelon(rows))
