"""Identifying sets for the simple s-t paths of a digraph.

Verification is polynomial on DAGs (arborescence criterion) and brute force
in general; minimization is brute force (the decision problem is hard), with
the flow-based set as the guaranteed sqrt(m)-approximation on DAGs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable

from .caps import Caps, DEFAULT_CAPS
from .errors import InvalidInstance, NoStPath, NotAcyclic
from .flows import min_weight_flow_identifying
from .graphs import (
    Digraph,
    StPair,
    WeightedGroundSet,
    enumerate_st_paths,
    reachable_from,
    reverse_reachable_to,
    shortest_arc_path,
    topological_order,
)
from .search import min_weight_hitting_set


@dataclass(frozen=True)
class PathIdentifyResult:
    identifying_set: frozenset[int]
    total_weight: Fraction
    method: str  # exact-bruteforce | flow-approx | verified-input
    approx_bound: Fraction | None = None


@dataclass(frozen=True)
class PathWitness:
    """Two distinct s-t paths with identical intersections with the queried set."""

    path_a: frozenset[int]
    path_b: frozenset[int]


def _validate_arc_set(g: Digraph, s: Iterable[int]) -> frozenset[int]:
    out = frozenset(int(a) for a in s)
    for a in out:
        if not (0 <= a < g.arc_count):
            raise InvalidInstance(f"arc id {a} out of range")
    return out


def _require_dag(g: Digraph) -> None:
    topo = topological_order(g)
    if not topo.is_acyclic:
        raise NotAcyclic(list(topo.cycle))


def _prune_to_st(g: Digraph, st: StPair) -> tuple[set[int], set[int]]:
    """Nodes/arcs on some s-t path. In a DAG an arc qualifies iff its tail is
    reachable from s and its head reaches t."""
    st.validate(g)
    from_s = reachable_from(g, st.source)
    if st.sink not in from_s:
        raise NoStPath(f"no path from {st.source} to {st.sink}")
    to_t = reverse_reachable_to(g, st.sink)
    keep_nodes = from_s & to_t
    keep_arcs = {a for a, (t, h) in enumerate(g.arcs) if t in keep_nodes and h in keep_nodes}
    return keep_nodes, keep_arcs


def verify_path_identifying_dag(g: Digraph, st: StPair,
                                s: Iterable[int]) -> tuple[bool, PathWitness | None]:
    """DAG-only polynomial verification.

    After pruning to nodes on s-t paths, S is identifying iff for every node v
    the non-S arcs whose tail is reachable from v form an arborescence rooted
    at v, i.e. no node acquires in-degree two within that arc set. A violation
    yields two v-w paths avoiding S, extended to full s-t paths that agree on S.
    """
    if g.has_self_loop():
        raise InvalidInstance("self-loops are not allowed in path settings")
    _require_dag(g)
    s_set = _validate_arc_set(g, s)
    keep_nodes, keep_arcs = _prune_to_st(g, st)
    allowed = sorted(keep_arcs - s_set)
    out: list[list[int]] = [[] for _ in range(g.node_count)]
    for aid in allowed:
        out[g.tail(aid)].append(aid)

    for v in sorted(keep_nodes):
        reach = reachable_from(g, v, allowed)
        indeg: dict[int, int] = {}
        first_in: dict[int, int] = {}
        offending: tuple[int, int, int] | None = None
        for aid in allowed:
            tail, head = g.arcs[aid]
            if tail not in reach:
                continue
            indeg[head] = indeg.get(head, 0) + 1
            if indeg[head] == 1:
                first_in[head] = aid
            elif offending is None:
                offending = (head, first_in[head], aid)
        if offending is not None:
            w_node, arc_a, arc_b = offending
            witness = _build_dag_witness(g, st, allowed, keep_arcs, v, w_node, arc_a, arc_b)
            return False, witness
    return True, None


def _build_dag_witness(g: Digraph, st: StPair, allowed: list[int], keep_arcs: set[int],
                       v: int, w: int, arc_a: int, arc_b: int) -> PathWitness:
    """Assemble two s-t paths differing only between v and w, off the set S."""
    prefix = shortest_arc_path(g, st.source, v, keep_arcs)
    suffix = shortest_arc_path(g, w, st.sink, keep_arcs)
    assert prefix is not None and suffix is not None
    mid_a = shortest_arc_path(g, v, g.tail(arc_a), allowed)
    mid_b = shortest_arc_path(g, v, g.tail(arc_b), allowed)
    assert mid_a is not None and mid_b is not None
    path_a = frozenset(prefix + mid_a + [arc_a] + suffix)
    path_b = frozenset(prefix + mid_b + [arc_b] + suffix)
    return PathWitness(path_a=path_a, path_b=path_b)


def verify_path_identifying_general(g: Digraph, st: StPair, s: Iterable[int],
                                    cap: int = DEFAULT_CAPS.max_paths
                                    ) -> tuple[bool, PathWitness | None]:
    """Brute-force verification by full path enumeration (exact on small instances)."""
    s_set = _validate_arc_set(g, s)
    paths = enumerate_st_paths(g, st, cap)
    seen: dict[frozenset[int], frozenset[int]] = {}
    for path in paths:
        trace = path & s_set
        if trace in seen:
            return False, PathWitness(path_a=seen[trace], path_b=path)
        seen[trace] = path
    return True, None


def exact_min_path_identifying(g: Digraph, st: StPair,
                               w: WeightedGroundSet | None = None,
                               caps: Caps = DEFAULT_CAPS) -> PathIdentifyResult:
    """Minimum-weight identifying set by best-first subset search.

    Every pair of distinct paths demands one arc of its symmetric difference,
    so this is an exact minimum-weight hitting set over those demands.
    """
    if w is None:
        w = WeightedGroundSet.uniform(g.arc_count)
    paths = enumerate_st_paths(g, st, caps.max_paths)
    demands = [
        frozenset(paths[i] ^ paths[j])
        for i in range(len(paths))
        for j in range(i + 1, len(paths))
    ]
    weight, elems = min_weight_hitting_set(g.arc_count, w, demands, caps.max_subsets)
    return PathIdentifyResult(
        identifying_set=frozenset(elems),
        total_weight=weight,
        method="exact-bruteforce",
    )


def _rational_sqrt_upper(m: int, denom: int = 10**6) -> Fraction:
    """Smallest p/denom that is >= sqrt(m); keeps the reported bound rational."""
    target = m * denom * denom
    p = isqrt(target)
    if p * p < target:
        p += 1
    return Fraction(p, denom)


def approx_min_path_identifying_dag(g: Digraph, st: StPair,
                                    w: WeightedGroundSet | None = None) -> PathIdentifyResult:
    """Flow-identifying set, valid for paths since paths are flow vertices.

    The recorded bound sqrt(|E|) is the guarantee for the unweighted size
    objective; with weights the set is still identifying and weight-minimal
    for flows, but carries no weighted path guarantee.
    """
    _require_dag(g)
    result = min_weight_flow_identifying(g, st, w)
    return PathIdentifyResult(
        identifying_set=result.identifying_set,
        total_weight=result.total_weight,
        method="flow-approx",
        approx_bound=_rational_sqrt_upper(g.arc_count),
    )


def gap_ratio(g: Digraph, st: StPair, caps: Caps = DEFAULT_CAPS) -> Fraction:
    """|flow-based set| / |path optimum| under the size objective.

    Both sets are empty exactly when the instance has a unique path; the
    ratio is 1 by convention in that case.
    """
    unit = WeightedGroundSet.uniform(g.arc_count)
    exact = exact_min_path_identifying(g, st, unit, caps)
    approx = approx_min_path_identifying_dag(g, st, unit)
    opt = len(exact.identifying_set)
    got = len(approx.identifying_set)
    if opt == 0 and got == 0:
        return Fraction(1)
    if opt == 0:
        raise AssertionError("flow set nonempty on a unique-path instance")
    return Fraction(got, opt)
