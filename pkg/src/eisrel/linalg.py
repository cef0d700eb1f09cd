"""Exact Gauss-Jordan elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = List[List[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(m: Sequence[Sequence]) -> Tuple[Matrix, int, List[int]]:
    """Reduced row-echelon form, rank and pivot columns.

    The pivot in each column is the first nonzero entry at or below the
    current row.  The input is not modified.
    """
    a = to_matrix(m)
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    pivots: List[int] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        piv = next((i for i in range(row, n_rows) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        if p != 1:
            a[row] = [x / p for x in a[row]]
        prow = a[row]
        for i in range(n_rows):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], prow)]
        pivots.append(col)
        row += 1
    return a, len(pivots), pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    return rref(m)[1]


def solve_square(a: Sequence[Sequence], b: Sequence) -> List[Fraction] | None:
    """Solve a x = b for square nonsingular a; None when a is singular."""
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, _, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [red[i][n] for i in range(n)]
