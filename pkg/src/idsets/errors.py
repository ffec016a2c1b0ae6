"""Exceptions shared across the solver modules.

Enumeration-style solvers distinguish "the instance is infeasible or the
answer is no" (a regular return value) from "the instance is too large for
brute force" (a *Explosion error below).
"""

from __future__ import annotations


class IdsetsError(Exception):
    """Base class for all library errors."""


class InvalidInstance(IdsetsError):
    """Malformed input: bad node/arc ids, self-loops where forbidden, ..."""


class NoStPath(IdsetsError):
    """The sink is unreachable from the source."""


class NotAcyclic(IdsetsError):
    """A DAG-only operation received a digraph with a directed cycle."""

    def __init__(self, cycle: list[int]):
        super().__init__(f"digraph contains a directed cycle, arc ids {cycle}")
        self.cycle = cycle


class CapExceeded(IdsetsError):
    """Base class for brute-force budget violations."""


class PathExplosion(CapExceeded):
    """More simple s-t paths than the enumeration cap."""


class SubsetExplosion(CapExceeded):
    """Subset search exceeded its state budget."""


class EnumerationExplosion(CapExceeded):
    """Ground set too large for exhaustive subset enumeration."""


class EliminationExplosion(CapExceeded):
    """Fourier-Motzkin elimination exceeded its variable/row budget."""


class NotIdentifying(IdsetsError):
    """A toll construction was asked for a set that is not identifying."""

    def __init__(self, witness=None):
        super().__init__("the given set is not identifying")
        self.witness = witness


class TargetNotInX(IdsetsError):
    """The target state is not a member of the explicit solution list."""


class TargetOutsideAffineHull(IdsetsError):
    """The target point does not lie in the affine hull of the basis."""


class NoSubgradient(IdsetsError):
    """The cost oracle cannot produce a subgradient at the target."""


class NotABasis(IdsetsError):
    """The given set is not a basis of the matroid."""


class ElementInBasis(IdsetsError):
    """A fundamental-circuit query named an element already in the basis."""


class NotABase(IdsetsError):
    """The given vector is not a point of the base polyhedron."""
