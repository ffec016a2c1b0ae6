"""Identifying sets for an explicit list of binary solution vectors.

Separating every pair of distinct vectors is a set-cover problem over the
pair universe; the weighted greedy gives the standard logarithmic guarantee
and a best-first subset search provides the exact optimum at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .caps import Caps, DEFAULT_CAPS
from .errors import InvalidInstance, SubsetExplosion
from .graphs import WeightedGroundSet
from .search import min_weight_hitting_set

BITSET_PAIR_LIMIT = 1 << 16


@dataclass(frozen=True)
class SolutionList:
    """Deduplicated binary vectors of one common dimension."""

    dimension: int
    vectors: tuple[tuple[int, ...], ...]

    def __init__(self, dimension: int, vectors: Iterable[Sequence[int]]):
        seen: set[tuple[int, ...]] = set()
        unique: list[tuple[int, ...]] = []
        for vec in vectors:
            tup = tuple(int(v) for v in vec)
            if len(tup) != dimension:
                raise InvalidInstance("vector length does not match dimension")
            if any(v not in (0, 1) for v in tup):
                raise InvalidInstance("vectors must be binary")
            if tup not in seen:
                seen.add(tup)
                unique.append(tup)
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "vectors", tuple(unique))

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "SolutionList":
        rows = [tuple(int(ch) for ch in s) for s in strings]
        if not rows:
            raise InvalidInstance("need at least one vector")
        return cls(len(rows[0]), rows)

    @classmethod
    def from_sets(cls, dimension: int, sets: Iterable[Iterable[int]]) -> "SolutionList":
        rows = []
        for s in sets:
            s = set(s)
            rows.append(tuple(1 if e in s else 0 for e in range(dimension)))
        return cls(dimension, rows)

    def __len__(self) -> int:
        return len(self.vectors)


def verify_explicit_identifying(
    x: SolutionList, s: Iterable[int]
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Pairwise separation via projection hashing; a collision is the witness."""
    cols = sorted(set(s))
    for e in cols:
        if not (0 <= e < x.dimension):
            raise InvalidInstance(f"element id {e} out of range")
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for vec in x.vectors:
        proj = tuple(vec[e] for e in cols)
        if proj in seen:
            return False, (seen[proj], vec)
        seen[proj] = vec
    return True, None


@dataclass(frozen=True)
class GreedyCoverResult:
    identifying_set: frozenset[int]
    total_weight: Fraction
    # (element, newly separated pair count) per greedy round.
    trace: tuple[tuple[int, int], ...]


def _pair_list(x: SolutionList) -> list[tuple[int, int]]:
    n = len(x.vectors)
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def greedy_identifying(x: SolutionList,
                       w: WeightedGroundSet | None = None) -> GreedyCoverResult:
    """Weighted set-cover greedy over the pair universe.

    Each round picks the element maximizing newly-separated-pairs per weight
    (exact cross-multiplied comparison; zero weight with positive gain counts
    as infinite), ties to the smaller id. Elements separating nothing are
    never chosen.
    """
    if w is None:
        w = WeightedGroundSet.uniform(x.dimension)
    pairs = _pair_list(x)
    if len(pairs) <= BITSET_PAIR_LIMIT:
        return _greedy_bitset(x, w, pairs)
    return _greedy_streaming(x, w)


def _better(gain_a: int, w_a: Fraction, gain_b: int, w_b: Fraction) -> bool:
    """True when ratio gain_a/w_a beats gain_b/w_b (0-weight = infinite)."""
    if w_a == 0 and w_b == 0:
        return False  # both infinite: a tie, resolved by id order
    return gain_a * w_b > gain_b * w_a


def _greedy_bitset(x: SolutionList, w: WeightedGroundSet,
                   pairs: list[tuple[int, int]]) -> GreedyCoverResult:
    masks = []
    for e in range(x.dimension):
        mask = 0
        for p, (i, j) in enumerate(pairs):
            if x.vectors[i][e] != x.vectors[j][e]:
                mask |= 1 << p
        masks.append(mask)
    target = (1 << len(pairs)) - 1
    covered = 0
    chosen: list[int] = []
    trace: list[tuple[int, int]] = []
    while covered != target:
        best_e, best_gain = -1, 0
        for e in range(x.dimension):
            if e in chosen:
                continue
            gain = (masks[e] & ~covered).bit_count()
            if gain == 0:
                continue
            if best_e == -1 or _better(gain, w[e], best_gain, w[best_e]):
                best_e, best_gain = e, gain
        if best_e == -1:
            raise AssertionError("uncovered pair with no separating element")
        chosen.append(best_e)
        trace.append((best_e, best_gain))
        covered |= masks[best_e]
    s = frozenset(chosen)
    return GreedyCoverResult(identifying_set=s, total_weight=w.total(s),
                             trace=tuple(trace))


def _greedy_streaming(x: SolutionList, w: WeightedGroundSet) -> GreedyCoverResult:
    """Per-round recount without materializing pair masks (large |X|)."""
    uncovered = _pair_list(x)
    chosen: list[int] = []
    trace: list[tuple[int, int]] = []
    while uncovered:
        gains = [0] * x.dimension
        for i, j in uncovered:
            vi, vj = x.vectors[i], x.vectors[j]
            for e in range(x.dimension):
                if e not in chosen and vi[e] != vj[e]:
                    gains[e] += 1
        best_e = -1
        for e in range(x.dimension):
            if e in chosen or gains[e] == 0:
                continue
            if best_e == -1 or _better(gains[e], w[e], gains[best_e], w[best_e]):
                best_e = e
        if best_e == -1:
            raise AssertionError("uncovered pair with no separating element")
        chosen.append(best_e)
        trace.append((best_e, gains[best_e]))
        uncovered = [(i, j) for i, j in uncovered
                     if x.vectors[i][best_e] == x.vectors[j][best_e]]
    s = frozenset(chosen)
    return GreedyCoverResult(identifying_set=s, total_weight=w.total(s),
                             trace=tuple(trace))


def exact_identifying(x: SolutionList, w: WeightedGroundSet | None = None,
                      caps: Caps = DEFAULT_CAPS) -> tuple[frozenset[int], Fraction]:
    """Minimum-weight separating set by best-first subset search."""
    if w is None:
        w = WeightedGroundSet.uniform(x.dimension)
    if 1 << min(x.dimension, 63) > caps.max_subsets:
        raise SubsetExplosion(
            f"2^{x.dimension} subsets exceed the cap {caps.max_subsets}")
    demands = []
    for i in range(len(x.vectors)):
        for j in range(i + 1, len(x.vectors)):
            vi, vj = x.vectors[i], x.vectors[j]
            demands.append(frozenset(e for e in range(x.dimension) if vi[e] != vj[e]))
    weight, elems = min_weight_hitting_set(x.dimension, w, demands, caps.max_subsets)
    return frozenset(elems), weight
