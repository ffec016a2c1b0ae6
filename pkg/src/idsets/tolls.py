"""Toll synthesis: price vectors that steer a system into a chosen state.

Discrete case: with an identifying set S and a binary solution list, pushing
each S-coordinate of the target with a large-enough bonus/penalty M makes the
target a minimizer of any cost. Convex case: a subgradient at the target is
cancelled exactly on the affine hull by solving a linear system supported on
S. The integer-lattice counterexample check decides, per linear cost, whether
any toll vector supported on S enforces each target, by exact
Fourier-Motzkin elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .caps import Caps, DEFAULT_CAPS
from .errors import (
    EliminationExplosion,
    NoSubgradient,
    NotIdentifying,
    TargetNotInX,
    TargetOutsideAffineHull,
)
from .explicit import SolutionList, verify_explicit_identifying
from .linalg import Vector, as_vector, solve_linear, vec_dot
from .linear import AffineBasis, verify_identifying_from_basis


@dataclass(frozen=True)
class CostOracle:
    """Cost evaluation plus an optional subgradient map."""

    evaluate: Callable[[Vector], Fraction]
    subgradient: Callable[[Vector], Vector] | None = None


def linear_cost(coefficients: Sequence, constant: Fraction | int = 0) -> CostOracle:
    coeffs = as_vector(coefficients)
    const = Fraction(constant)
    return CostOracle(
        evaluate=lambda x: vec_dot(coeffs, as_vector(x)) + const,
        subgradient=lambda x: coeffs,
    )


def quadratic_cost(resistances: Sequence) -> CostOracle:
    """c(x) = 1/2 * sum r_e x_e^2, the energy form with per-element resistances."""
    r = as_vector(resistances)
    return CostOracle(
        evaluate=lambda x: sum((re * xe * xe for re, xe in zip(r, as_vector(x))),
                               Fraction(0)) / 2,
        subgradient=lambda x: tuple(re * xe for re, xe in zip(r, as_vector(x))),
    )


@dataclass(frozen=True)
class TollVector:
    """Rational toll per element; zero outside the support."""

    size: int
    gamma: dict[int, Fraction]
    support: frozenset[int]

    def __post_init__(self):
        assert set(self.gamma) <= set(self.support)

    def as_vector(self) -> Vector:
        return tuple(self.gamma.get(e, Fraction(0)) for e in range(self.size))

    def tolled_cost(self, c: CostOracle, x: Sequence) -> Fraction:
        vec = as_vector(x)
        return c.evaluate(vec) + vec_dot(self.as_vector(), vec)


def discrete_tolls(x: SolutionList, s: Iterable[int], c: CostOracle,
                   target: Sequence[int], margin: Fraction | int = 0) -> TollVector:
    """Tolls -M / +M on the S-coordinates the target sets to 1 / 0.

    M = max(1, 2 * max |c|) guarantees the target attains the tolled minimum
    (the textbook 2*max|c| degenerates to 0 for a zero cost, hence the floor).
    A positive margin makes the target the unique minimizer.
    """
    s_set = frozenset(s)
    ok, witness = verify_explicit_identifying(x, s_set)
    if not ok:
        raise NotIdentifying(witness)
    target_vec = tuple(int(v) for v in target)
    if target_vec not in x.vectors:
        raise TargetNotInX(f"target {target_vec} not among the solutions")
    peak = max(abs(c.evaluate(as_vector(vec))) for vec in x.vectors)
    m = max(Fraction(1), 2 * peak) + Fraction(margin)
    gamma = {e: (-m if target_vec[e] == 1 else m) for e in sorted(s_set)}
    return TollVector(size=x.dimension, gamma=gamma, support=s_set)


def convex_tolls(basis: AffineBasis, s: Iterable[int], c: CostOracle,
                 target: Sequence) -> TollVector:
    """Solve (x_i - x_0)^T gamma = -d^T (x_i - x_0) with gamma zero off S.

    d is a subgradient of c at the target; the system is solvable because the
    complement of S is independent in the basis matroid, and the resulting
    zero subgradient of the tolled cost certifies the target as a minimizer.
    """
    s_set = frozenset(s)
    ok, delta = verify_identifying_from_basis(basis, s_set)
    if not ok:
        raise NotIdentifying(delta)
    target_vec = as_vector(target)
    if basis.affine_coefficients(target_vec) is None:
        raise TargetOutsideAffineHull("target is not in the affine hull of the basis")
    if c.subgradient is None:
        raise NoSubgradient("cost oracle has no subgradient map")
    d = as_vector(c.subgradient(target_vec))
    cols = sorted(s_set)
    diffs = basis.differences()
    a = [[diff[e] for e in cols] for diff in diffs]
    b = [-vec_dot(d, diff) for diff in diffs]
    solution = solve_linear(a, b)
    assert solution is not None, "system must be solvable for an identifying S"
    gamma = {e: value for e, value in zip(cols, solution)}
    return TollVector(size=basis.ground_size, gamma=gamma, support=s_set)


@dataclass(frozen=True)
class ControllingVerdict:
    controlling: bool
    # On failure: the unenforceable target, the cost index, and the derived
    # contradiction 0 >= rhs with rhs > 0.
    failing_target: Vector | None = None
    failing_cost: int | None = None
    contradiction_rhs: Fraction | None = None


def controlling_counterexample_check(states: Sequence[Sequence], s: Iterable[int],
                                     costs: Sequence[CostOracle],
                                     caps: Caps = DEFAULT_CAPS) -> ControllingVerdict:
    """Decide, per cost and target, feasibility of the argmin inequality system.

    The system over gamma in R^S reads, for every other state x,
    sum_e gamma_e (x_e - x*_e) >= c(x*) - c(x); exact Fourier-Motzkin
    elimination decides it. The first infeasible (target, cost) pair is the
    verdict witness.
    """
    vectors = [as_vector(state) for state in states]
    cols = sorted(frozenset(s))
    if len(cols) > caps.max_fm_vars:
        raise EliminationExplosion(
            f"|S| = {len(cols)} exceeds the elimination cap {caps.max_fm_vars}")
    for ci, cost in enumerate(costs):
        values = [cost.evaluate(vec) for vec in vectors]
        for ti, target in enumerate(vectors):
            rows = []
            for xi, other in enumerate(vectors):
                if xi == ti:
                    continue
                coeffs = tuple(other[e] - target[e] for e in cols)
                rhs = values[ti] - values[xi]
                rows.append((coeffs, rhs))
            feasible, contradiction = fourier_motzkin_feasible(rows, len(cols))
            if not feasible:
                return ControllingVerdict(controlling=False, failing_target=target,
                                          failing_cost=ci, contradiction_rhs=contradiction)
    return ControllingVerdict(controlling=True)


def fourier_motzkin_feasible(
    rows: Sequence[tuple[tuple[Fraction, ...], Fraction]], nvars: int,
    max_rows: int = 100_000,
) -> tuple[bool, Fraction | None]:
    """Feasibility of a system of inequalities sum(coeffs * y) >= rhs.

    Eliminates variables left to right; after elimination, a constant row
    0 >= rhs with rhs > 0 is the contradiction. Rows are normalized and
    deduplicated to slow the quadratic blowup.
    """
    current = [_normalize_row(tuple(Fraction(v) for v in coeffs), Fraction(rhs))
               for coeffs, rhs in rows]
    for var in range(nvars):
        positive, negative, rest = [], [], []
        for coeffs, rhs in current:
            a = coeffs[var]
            if a > 0:
                positive.append((coeffs, rhs))
            elif a < 0:
                negative.append((coeffs, rhs))
            else:
                rest.append((coeffs, rhs))
        combined: set[tuple[tuple[Fraction, ...], Fraction]] = set(rest)
        for cp, rp in positive:
            for cn, rn in negative:
                scale_p, scale_n = -cn[var], cp[var]
                coeffs = tuple(scale_p * p + scale_n * q for p, q in zip(cp, cn))
                rhs = scale_p * rp + scale_n * rn
                combined.add(_normalize_row(coeffs, rhs))
        current = list(combined)
        if len(current) > max_rows:
            raise EliminationExplosion(f"elimination exceeded {max_rows} rows")
    for coeffs, rhs in current:
        if rhs > 0:
            return False, rhs
    return True, None


def _normalize_row(coeffs: tuple[Fraction, ...],
                   rhs: Fraction) -> tuple[tuple[Fraction, ...], Fraction]:
    scale = next((abs(v) for v in coeffs if v != 0), None)
    if scale is None:
        return coeffs, rhs
    return tuple(v / scale for v in coeffs), rhs / scale
