"""Small exact linear algebra over Fractions: rank, solving, dependencies.

Independence of rational vectors is an exact property; everything here avoids
floating point so downstream equality tests (tightness, rank counts) never
need tolerances.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]


def as_vector(values: Sequence) -> Vector:
    return tuple(Fraction(v) for v in values)


def rref(matrix: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (in a copy) and the list of pivot columns."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [value * inv for value in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    mat = [list(map(Fraction, row)) for row in rows]
    if not mat:
        return 0
    _, pivots = rref(mat)
    return len(pivots)


def vectors_independent(vectors: Sequence[Vector]) -> bool:
    return matrix_rank(list(vectors)) == len(vectors)


def dependency(vectors: Sequence[Vector]) -> Vector | None:
    """Coefficients of a nontrivial vanishing combination, or None if independent.

    Returned c satisfies sum(c[i] * vectors[i]) == 0 with some c[i] == 1.
    """
    n = len(vectors)
    if n == 0:
        return None
    dim = len(vectors[0])
    # Columns are the vectors; a nullspace vector is a dependency.
    mat = [[vectors[j][i] for j in range(n)] for i in range(dim)]
    reduced, pivots = rref(mat)
    pivot_set = set(pivots)
    free = next((j for j in range(n) if j not in pivot_set), None)
    if free is None:
        return None
    coeffs = [Fraction(0)] * n
    coeffs[free] = Fraction(1)
    for row, pc in enumerate(pivots):
        coeffs[pc] = -reduced[row][free]
    return tuple(coeffs)


def solve_linear(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector | None:
    """One exact solution of A x = b with free variables set to 0, or None."""
    rows = len(a)
    if rows == 0:
        return ()
    cols = len(a[0])
    aug = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(a, b)]
    reduced, pivots = rref(aug)
    if cols in pivots:  # pivot in the rhs column: inconsistent system
        return None
    x = [Fraction(0)] * cols
    for row, pc in enumerate(pivots):
        x[pc] = reduced[row][cols]
    return tuple(x)


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(c: Fraction, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def vec_dot(a: Vector, b: Vector) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def unit_vector(dim: int, index: int) -> Vector:
    return tuple(Fraction(1) if i == index else Fraction(0) for i in range(dim))
