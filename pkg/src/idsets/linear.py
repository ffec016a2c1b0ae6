"""Identifying sets for a convex set given by an affine basis.

The complements of identifying sets form a linear matroid: F is independent
when the difference vectors of the basis together with the unit vectors of F
are linearly independent. Minimum-weight identifying sets are complements of
maximum-weight independent sets, found by the matroid greedy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInstance
from .graphs import WeightedGroundSet
from .linalg import (
    Vector,
    as_vector,
    dependency,
    matrix_rank,
    solve_linear,
    unit_vector,
    vec_sub,
    vectors_independent,
)


@dataclass(frozen=True)
class AffineBasis:
    """Affinely independent points x0..xk spanning the affine hull of X."""

    points: tuple[Vector, ...]

    def __init__(self, points: Sequence[Sequence]):
        pts = tuple(as_vector(p) for p in points)
        if not pts:
            raise InvalidInstance("affine basis needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise InvalidInstance("basis points must share one dimension")
        object.__setattr__(self, "points", pts)
        if matrix_rank(self.differences()) != self.hull_dimension:
            raise InvalidInstance("basis points are not affinely independent")

    @property
    def ground_size(self) -> int:
        return len(self.points[0])

    @property
    def hull_dimension(self) -> int:
        """Dimension k of the affine hull."""
        return len(self.points) - 1

    def differences(self) -> list[Vector]:
        x0 = self.points[0]
        return [vec_sub(p, x0) for p in self.points[1:]]

    def affine_coefficients(self, target: Sequence) -> Vector | None:
        """Coefficients lambda with target = x0 + sum(lambda_i * (x_i - x0)), or None."""
        tgt = as_vector(target)
        if len(tgt) != self.ground_size:
            raise InvalidInstance("target has the wrong dimension")
        diffs = self.differences()
        if not diffs:
            return () if tgt == self.points[0] else None
        a = [[diffs[j][i] for j in range(len(diffs))] for i in range(self.ground_size)]
        b = list(vec_sub(tgt, self.points[0]))
        return solve_linear(a, b)


def ax_independent(basis: AffineBasis, f: Iterable[int]) -> bool:
    """Exact rank test: difference vectors plus the unit vectors of F."""
    f_set = sorted(set(f))
    for e in f_set:
        if not (0 <= e < basis.ground_size):
            raise InvalidInstance(f"element id {e} out of range")
    vectors = basis.differences() + [unit_vector(basis.ground_size, e) for e in f_set]
    return vectors_independent(vectors)


def min_weight_identifying_from_basis(basis: AffineBasis,
                                      w: WeightedGroundSet | None = None) -> frozenset[int]:
    """Matroid greedy: grow a maximum-weight independent complement F.

    Elements are scanned heaviest first (ties: smaller id), so S = E - F is a
    minimum-weight basis of the dual matroid and always has size k.
    """
    n = basis.ground_size
    if w is None:
        w = WeightedGroundSet.uniform(n)
    kept: list[int] = []
    vectors = basis.differences()
    for e in sorted(range(n), key=lambda e: (-w[e], e)):
        candidate = vectors + [unit_vector(n, e)]
        if vectors_independent(candidate):
            vectors = candidate
            kept.append(e)
    return frozenset(set(range(n)) - set(kept))


def verify_identifying_from_basis(basis: AffineBasis,
                                  s: Iterable[int]) -> tuple[bool, Vector | None]:
    """True iff the complement of S is independent in the basis matroid.

    On failure returns a nonzero direction in the span of the difference
    vectors that vanishes on S: moving inside X along it changes no
    coordinate of S, so two points of X agree on S.
    """
    s_set = set(s)
    for e in s_set:
        if not (0 <= e < basis.ground_size):
            raise InvalidInstance(f"element id {e} out of range")
    complement = sorted(set(range(basis.ground_size)) - s_set)
    diffs = basis.differences()
    vectors = diffs + [unit_vector(basis.ground_size, e) for e in complement]
    coeffs = dependency(vectors)
    if coeffs is None:
        return True, None
    k = len(diffs)
    delta = tuple(
        sum((coeffs[i] * diffs[i][j] for i in range(k)), Fraction(0))
        for j in range(basis.ground_size)
    )
    assert any(value != 0 for value in delta)
    assert all(delta[e] == 0 for e in s_set)
    return False, delta
