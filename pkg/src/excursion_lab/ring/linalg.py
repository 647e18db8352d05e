"""Fraction-free determinants over an integral domain."""

from __future__ import annotations

from typing import List, Sequence

from .base import Ring


def _square(M: Sequence[Sequence], ring: Ring) -> List[list]:
    n = len(M)
    rows = []
    for row in M:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows but a row of length {len(row)}")
        rows.append([ring.coerce(x) for x in row])
    return rows


def _eliminate(A: List[list], k: int, prev, ring: Ring) -> None:
    n = len(A)
    pivot = A[k][k]
    row_k = A[k]
    for i in range(k + 1, n):
        row_i = A[i]
        lead = row_i[k]
        for j in range(k + 1, n):
            num = pivot * row_i[j]
            if lead and row_k[j]:
                num = num - lead * row_k[j]
            # exact by Sylvester's identity; divide_exact raises otherwise
            row_i[j] = ring.divide_exact(num, prev) if num else ring.zero
        row_i[k] = ring.zero


def bareiss_det(M: Sequence[Sequence], ring: Ring):
    """Determinant of a square matrix by Bareiss' fraction-free elimination.

    Every intermediate division is exact; an inexact one raises, since it can
    only come from an arithmetic bug or a ring that is not a domain.
    """
    A = _square(M, ring)
    n = len(A)
    if n == 0:
        return ring.one
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        _eliminate(A, k, prev, ring)
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return det if sign == 1 else -det


def leading_minors(M: Sequence[Sequence], ring: Ring) -> list:
    """All leading principal minors ``[det M[:1,:1], ..., det M]`` in one pass.

    Bareiss without pivoting leaves the size-(k+1) leading minor on the
    diagonal at step k. Requires every leading minor except possibly the last
    to be nonzero.
    """
    A = _square(M, ring)
    n = len(A)
    prev = ring.one
    for k in range(n - 1):
        if not A[k][k]:
            raise ArithmeticError(f"leading minor of size {k + 1} vanishes; pivoting required")
        _eliminate(A, k, prev, ring)
        prev = A[k][k]
    return [A[k][k] for k in range(n)]
