"""Exact linear algebra over Z and Q for small dense matrices."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination over Q."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    a = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    a = [[Fraction(x) for x in r] for r in rows]
    m, n = len(a), len(a[0])
    rk = 0
    for col in range(n):
        pivot = next((r for r in range(rk, m) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rk], a[pivot] = a[pivot], a[rk]
        for r in range(m):
            if r != rk and a[r][col] != 0:
                f = a[r][col] / a[rk][col]
                for c in range(col, n):
                    a[r][c] -= f * a[rk][c]
        rk += 1
        if rk == m:
            break
    return rk


def elementary_divisors(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form, in divisibility order."""
    a: Matrix = [[int(x) for x in r] for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    divisors: list[int] = []
    t = 0
    while t < min(m, n):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the whole remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest nonzero entry of row/column t onto the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, pi, pj = min(cands)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        divisors.append(abs(a[t][t]))
        t += 1
    return divisors


class RankDeficientError(ValueError):
    """The matrix does not have full row rank."""


def lattice_index(rows: Sequence[Sequence[int]]) -> int:
    """Index of the image lattice of a full-row-rank integer matrix in Z^rows.

    An empty matrix (no rows) has index 1.
    """
    if len(rows) == 0:
        return 1
    divs = elementary_divisors(rows)
    if len(divs) < len(rows):
        raise RankDeficientError(f"matrix has rank {len(divs)} < {len(rows)} rows")
    index = 1
    for x in divs:
        index *= x
    return index


def integer_kernel_basis(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """A Z-basis of {x in Z^ncols : A x = 0}, returned as a list of column vectors.

    Unimodular column operations bring A to column echelon form; the columns
    of the accumulated transform that end up under zero columns span the
    kernel lattice.
    """
    a: Matrix = [[int(x) for x in r] for r in rows]
    m = len(a)
    u: Matrix = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def col_op(dst: int, src: int, q: int) -> None:
        # column dst -= q * column src
        for row in a:
            row[dst] -= q * row[src]
        for row in u:
            row[dst] -= q * row[src]

    def swap(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in u:
            row[i], row[j] = row[j], row[i]

    pivot_col = 0
    for r in range(m):
        if pivot_col >= ncols:
            break
        while True:
            nz = [j for j in range(pivot_col, ncols) if a[r][j]]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(a[r][j]))
            swap(pivot_col, j0)
            done = True
            for j in range(pivot_col + 1, ncols):
                if a[r][j]:
                    col_op(j, pivot_col, a[r][j] // a[r][pivot_col])
                    if a[r][j]:
                        done = False
            if done:
                pivot_col += 1
                break
    return [[u[i][j] for i in range(ncols)] for j in range(pivot_col, ncols)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def gcd_list(values) -> int:
    out = 0
    for v in values:
        out = gcd(out, int(v))
    return out
