"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples over int or Fraction.  Everything here is
exact: no floating point is used anywhere in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def shape(mat: Matrix) -> tuple[int, int]:
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    return rows, cols


def zero_matrix(rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    return tuple((0,) * cols for _ in range(rows))


def mat_mul(a: Matrix, b: Matrix) -> tuple[tuple[int, ...], ...]:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"shape mismatch {ra}x{ca} * {rb}x{cb}")
    bt = list(zip(*b)) if rb else [[]] * cb
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_add(a: Matrix, b: Matrix) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a: Matrix) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(-x for x in row) for row in a)


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def qq_rank(mat: Matrix) -> int:
    """Rank over the rationals by fraction-free Gaussian elimination."""
    rows = [list(map(Fraction, row)) for row in mat]
    nrows, ncols = len(rows), len(rows[0]) if rows else 0
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        piv = next((i for i in range(rank, nrows) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        for i in range(rank + 1, nrows):
            f = rows[i][col] * inv
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        rank += 1
        col += 1
    return rank


def kernel_basis(mat: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the rational null space {v : mat @ v = 0} (column vectors)."""
    nrows, ncols = shape(mat)
    rows = [list(map(Fraction, row)) for row in mat]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / prow[col]
        rows[r] = [x * inv for x in prow]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(tuple(v))
    return basis


def column_span_rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Rank of the span of the given vectors."""
    if not vectors:
        return 0
    return qq_rank(list(zip(*vectors)))


def snf_divisors(mat: Matrix) -> list[int]:
    """Nonzero diagonal entries d1 | d2 | ... of the Smith normal form."""
    a = [list(row) for row in mat]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    divisors: list[int] = []
    top = 0
    while True:
        piv = None
        best = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best = v
                    piv = (i, j)
        if piv is None:
            break
        pi, pj = piv
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        # clear row and column with Euclidean steps
        while True:
            done = True
            for i in range(top + 1, nrows):
                if a[i][top]:
                    q = a[i][top] // a[top][top]
                    a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                    if a[i][top]:
                        a[top], a[i] = a[i], a[top]
                        done = False
            for j in range(top + 1, ncols):
                if a[top][j]:
                    q = a[top][j] // a[top][top]
                    for row in a:
                        row[j] -= q * row[top]
                    if a[top][j]:
                        for row in a:
                            row[top], row[j] = row[j], row[top]
                        done = False
            if done:
                break
        # enforce divisibility of the remaining block by the pivot
        d = abs(a[top][top])
        bad = next(
            (
                (i, j)
                for i in range(top + 1, nrows)
                for j in range(top + 1, ncols)
                if a[i][j] % d
            ),
            None,
        )
        if bad is not None:
            bi, _ = bad
            a[top] = [x + y for x, y in zip(a[top], a[bi])]
            continue
        divisors.append(d)
        top += 1
    # repair the divisibility chain if the greedy pass missed it
    for i in range(len(divisors) - 1):
        for j in range(i + 1, len(divisors)):
            g = math.gcd(divisors[i], divisors[j])
            l = divisors[i] * divisors[j] // g
            divisors[i], divisors[j] = g, l
    return divisors
