"""Fraction-free (Bareiss) elimination over the integers.

Rational input is scaled row by row to integers first, so every intermediate
quantity stays an integer and every division is exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import SingularSystem

__all__ = ["bareiss_det", "bareiss_solve"]


def _integer_rows(rows):
    """Scale each row to integers; return (int rows, per-row scale factors)."""
    out, scales = [], []
    for row in rows:
        row = [Fraction(v) for v in row]
        s = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * s) for v in row])
        scales.append(s)
    return out, scales


def _forward(M: list[list[int]], n: int) -> int:
    """In-place Bareiss elimination on the first n columns. Returns the row-swap sign.

    Raises SingularSystem when no pivot exists in some column.
    """
    sign = 1
    prev = 1
    width = len(M[0]) if M else 0
    for k in range(n):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                raise SingularSystem(f"no pivot in column {k}")
        pk = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            rowi = M[i]
            f = rowi[k]
            if f == 0:
                for j in range(k + 1, width):
                    rowi[j] = rowi[j] * pk // prev
            else:
                for j in range(k + 1, width):
                    rowi[j] = (rowi[j] * pk - f * rowk[j]) // prev
            rowi[k] = 0
        prev = pk
    return sign


def bareiss_det(A: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(A)
    if n == 0:
        return Fraction(1)
    M, scales = _integer_rows(A)
    try:
        sign = _forward(M, n)
    except SingularSystem:
        return Fraction(0)
    total_scale = 1
    for s in scales:
        total_scale *= s
    return Fraction(sign * M[n - 1][n - 1], total_scale)


def bareiss_solve(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve A X = B exactly; B is n x k (list of rows). Returns X as n x k rows."""
    n = len(A)
    k = len(B[0]) if n else 0
    aug = [list(A[i]) + list(B[i]) for i in range(n)]
    M, _ = _integer_rows(aug)
    _forward(M, n)
    X = [[Fraction(0)] * k for _ in range(n)]
    for i in range(n - 1, -1, -1):
        row = M[i]
        piv = row[i]
        for col in range(k):
            acc = Fraction(row[n + col])
            for j in range(i + 1, n):
                if row[j]:
                    acc -= row[j] * X[j][col]
            X[i][col] = acc / piv
    return X
