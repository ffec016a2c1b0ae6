"""Identifying sets for matroid bases via circuits and connected components.

A set S is identifying for the bases exactly when every circuit C satisfies
|S ∩ C| >= |C| - 1, equivalently S misses at most one element per connected
component. The minimum-weight identifying set therefore drops the heaviest
element of each non-singleton component.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .caps import Caps, DEFAULT_CAPS
from .errors import ElementInBasis, EnumerationExplosion, InvalidInstance, NotABasis
from .graphs import Digraph, UnionFind, WeightedGroundSet


class MatroidOracle:
    """Independence oracle with memoized queries.

    User-supplied callables are trusted modulo cheap sanity checks; the
    built-in constructors below are exact by construction and spot-checked
    probabilistically once.
    """

    def __init__(self, ground_size: int, is_independent: Callable[[frozenset[int]], bool],
                 name: str = "custom"):
        self.ground_size = ground_size
        self.name = name
        self._fn = is_independent
        self._cache: dict[frozenset[int], bool] = {}

    def is_independent(self, subset: Iterable[int]) -> bool:
        key = frozenset(subset)
        if key not in self._cache:
            self._cache[key] = bool(self._fn(key))
        return self._cache[key]

    def rank(self, subset: Iterable[int]) -> int:
        """Greedy rank computation; exact for matroids."""
        current: set[int] = set()
        for e in sorted(set(subset)):
            if self.is_independent(current | {e}):
                current.add(e)
        return len(current)


def spot_check(m: MatroidOracle, seed: int = 0, samples: int = 40) -> None:
    """Cheap probabilistic axioms check: heredity and exchange on random sets."""
    if not m.is_independent(frozenset()):
        raise InvalidInstance("empty set must be independent")
    rng = random.Random(seed)
    ground = list(range(m.ground_size))
    for _ in range(samples):
        a = frozenset(e for e in ground if rng.random() < 0.5)
        if m.is_independent(a) and a:
            drop = rng.choice(sorted(a))
            if not m.is_independent(a - {drop}):
                raise InvalidInstance("heredity violated")
        b = frozenset(e for e in ground if rng.random() < 0.5)
        if m.is_independent(a) and m.is_independent(b) and len(a) < len(b):
            if not any(m.is_independent(a | {e}) for e in b - a):
                raise InvalidInstance("exchange property violated")


def uniform_matroid(k: int, n: int) -> MatroidOracle:
    if not (0 <= k <= n):
        raise InvalidInstance("uniform matroid needs 0 <= k <= n")
    m = MatroidOracle(n, lambda t: len(t) <= k, name=f"uniform({k},{n})")
    spot_check(m)
    return m


def free_matroid(n: int) -> MatroidOracle:
    return uniform_matroid(n, n)


def graphic_matroid(g: Digraph) -> MatroidOracle:
    """Edges independent iff they form a forest (directions ignored)."""

    def independent(subset: frozenset[int]) -> bool:
        uf = UnionFind(g.node_count)
        for aid in subset:
            tail, head = g.arcs[aid]
            if tail == head or not uf.union(tail, head):
                return False
        return True

    m = MatroidOracle(g.arc_count, independent, name=f"graphic(n={g.node_count})")
    spot_check(m)
    return m


def partition_matroid(blocks: list[Iterable[int]], capacities: list[int]) -> MatroidOracle:
    block_list = [frozenset(b) for b in blocks]
    if len(block_list) != len(capacities):
        raise InvalidInstance("one capacity per block required")
    seen: set[int] = set()
    for b in block_list:
        if b & seen:
            raise InvalidInstance("blocks must be disjoint")
        seen |= b
    if seen != set(range(len(seen))) or any(c < 0 for c in capacities):
        raise InvalidInstance("blocks must partition 0..n-1, capacities >= 0")

    def independent(subset: frozenset[int]) -> bool:
        return all(len(subset & b) <= c for b, c in zip(block_list, capacities))

    m = MatroidOracle(len(seen), independent, name="partition")
    spot_check(m)
    return m


def builtin_matroid(kind: str, **params) -> MatroidOracle:
    if kind == "uniform":
        return uniform_matroid(params["k"], params["n"])
    if kind == "free":
        return free_matroid(params["n"])
    if kind == "graphic":
        return graphic_matroid(params["graph"])
    if kind == "partition":
        return partition_matroid(params["blocks"], params["capacities"])
    raise InvalidInstance(f"unknown matroid kind {kind!r}")


@dataclass(frozen=True)
class MatroidComponents:
    partition: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class MatroidWitness:
    """A violated circuit and two bases that agree on the queried set."""

    circuit: frozenset[int]
    basis_a: frozenset[int]
    basis_b: frozenset[int]


def find_basis(m: MatroidOracle) -> frozenset[int]:
    """Lexicographically first basis (greedy over ascending element ids)."""
    current: set[int] = set()
    for e in range(m.ground_size):
        if m.is_independent(current | {e}):
            current.add(e)
    return frozenset(current)


def fundamental_circuit(m: MatroidOracle, basis: Iterable[int], e: int) -> frozenset[int]:
    """The unique circuit inside basis + e.

    An element belongs to the circuit exactly when deleting it from basis + e
    restores independence.
    """
    b = frozenset(basis)
    if e in b:
        raise ElementInBasis(f"element {e} already in the basis")
    if not m.is_independent(b):
        raise NotABasis("the given set is dependent")
    for f in range(m.ground_size):
        if f not in b and f != e and m.is_independent(b | {f}):
            raise NotABasis(f"the given set is not maximal (can add {f})")
    extended = b | {e}
    if m.is_independent(extended):
        raise NotABasis("basis + e is independent; not a basis")
    return frozenset(f for f in extended if m.is_independent(extended - {f}))


def matroid_components(m: MatroidOracle) -> MatroidComponents:
    """Connected components via the fundamental graph of an arbitrary basis.

    Elements i in the basis and j outside are joined when i lies on the
    fundamental circuit of j; loops and coloops end up as singletons.
    """
    if not m.is_independent(frozenset()):
        raise InvalidInstance("inconsistent oracle: empty set dependent")
    basis = find_basis(m)
    uf = UnionFind(m.ground_size)
    for j in range(m.ground_size):
        if j in basis:
            continue
        for i in fundamental_circuit(m, basis, j) - {j}:
            uf.union(i, j)
    groups: dict[int, set[int]] = {}
    for e in range(m.ground_size):
        groups.setdefault(uf.find(e), set()).add(e)
    parts = sorted((frozenset(group) for group in groups.values()), key=min)
    return MatroidComponents(partition=tuple(parts))


def min_weight_matroid_identifying(
    m: MatroidOracle, w: WeightedGroundSet | None = None
) -> tuple[frozenset[int], MatroidComponents]:
    """Drop the heaviest element (ties: smallest id) of each non-singleton component."""
    if w is None:
        w = WeightedGroundSet.uniform(m.ground_size)
    components = matroid_components(m)
    s: set[int] = set()
    for part in components.partition:
        if len(part) < 2:
            continue
        keep = max(sorted(part), key=lambda e: (w[e], -e))
        s |= part - {keep}
    return frozenset(s), components


def enumerate_circuits(m: MatroidOracle, caps: Caps = DEFAULT_CAPS) -> list[frozenset[int]]:
    """All circuits (minimal dependent sets) by exhaustive subset scan."""
    n = m.ground_size
    if n > caps.max_ground:
        raise EnumerationExplosion(f"ground size {n} exceeds cap {caps.max_ground}")
    circuits: list[frozenset[int]] = []
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            t = frozenset(combo)
            if m.is_independent(t):
                continue
            if all(m.is_independent(t - {x}) for x in t):
                circuits.append(t)
    return circuits


def verify_matroid_identifying(
    m: MatroidOracle, s: Iterable[int], caps: Caps = DEFAULT_CAPS
) -> tuple[bool, MatroidWitness | None]:
    """Check |S ∩ C| >= |C| - 1 for every circuit C.

    A violated circuit yields two bases exchanging two of its non-S elements,
    hence indistinguishable on S.
    """
    s_set = frozenset(s)
    for circuit in enumerate_circuits(m, caps):
        if len(circuit & s_set) >= len(circuit) - 1:
            continue
        e, f = sorted(circuit - s_set)[:2]
        base = set(circuit - {f})
        for g_elem in range(m.ground_size):
            if g_elem not in base and g_elem != f and m.is_independent(base | {g_elem}):
                base.add(g_elem)
        basis_a = frozenset(base)
        basis_b = (basis_a | {f}) - {e}
        assert m.is_independent(basis_b)
        return False, MatroidWitness(circuit=circuit, basis_a=basis_a, basis_b=basis_b)
    return True, None
