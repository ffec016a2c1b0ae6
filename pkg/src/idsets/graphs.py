"""Directed-multigraph core: types and the graph primitives everything else uses.

Arc ids are dense indices 0..m-1, fixed by construction order; they are the
join key across all modules, so every operation reports arcs by id. All
tie-breaking is by smallest arc id to keep outputs deterministic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInstance, NoStPath, PathExplosion

Rational = Fraction


@dataclass(frozen=True)
class Digraph:
    """Immutable directed multigraph with dense integer arc ids.

    Parallel arcs and self-loops are representable; path/flow entry points
    reject self-loops at ingestion (a self-loop is never on a simple path
    and creates degenerate flow cycles).
    """

    node_count: int
    arcs: tuple[tuple[int, int], ...]

    def __init__(self, node_count: int, arcs: Iterable[tuple[int, int]]):
        object.__setattr__(self, "node_count", node_count)
        object.__setattr__(self, "arcs", tuple((int(t), int(h)) for t, h in arcs))
        if node_count < 0:
            raise InvalidInstance("node_count must be nonnegative")
        for aid, (tail, head) in enumerate(self.arcs):
            if not (0 <= tail < node_count and 0 <= head < node_count):
                raise InvalidInstance(f"arc {aid} = ({tail},{head}) out of range")

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def tail(self, arc: int) -> int:
        return self.arcs[arc][0]

    def head(self, arc: int) -> int:
        return self.arcs[arc][1]

    def has_self_loop(self) -> bool:
        return any(t == h for t, h in self.arcs)

    def out_arcs(self) -> list[list[int]]:
        """Adjacency by arc id: out_arcs()[v] lists arcs with tail v, ascending."""
        out: list[list[int]] = [[] for _ in range(self.node_count)]
        for aid, (tail, _) in enumerate(self.arcs):
            out[tail].append(aid)
        return out

    def in_arcs(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.node_count)]
        for aid, (_, head) in enumerate(self.arcs):
            inc[head].append(aid)
        return inc


@dataclass(frozen=True)
class StPair:
    source: int
    sink: int

    def __post_init__(self):
        if self.source == self.sink:
            raise InvalidInstance("source and sink must differ")

    def validate(self, g: Digraph) -> None:
        for v in (self.source, self.sink):
            if not (0 <= v < g.node_count):
                raise InvalidInstance(f"node id {v} out of range")


class WeightedGroundSet:
    """Nonnegative rational weight per element id, exact arithmetic throughout."""

    def __init__(self, weights: Sequence[Rational | int | str]):
        self.weights: tuple[Fraction, ...] = tuple(Fraction(w) for w in weights)
        for i, w in enumerate(self.weights):
            if w < 0:
                raise InvalidInstance(f"negative weight at element {i}")

    @classmethod
    def uniform(cls, size: int, value: Rational | int = 1) -> "WeightedGroundSet":
        return cls([Fraction(value)] * size)

    @property
    def size(self) -> int:
        return len(self.weights)

    def __getitem__(self, element: int) -> Fraction:
        return self.weights[element]

    def total(self, elements: Iterable[int]) -> Fraction:
        return sum((self.weights[e] for e in elements), Fraction(0))


class UnionFind:
    """Plain union-find with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def strongly_connected_components(g: Digraph) -> list[int]:
    """Component id per node (Tarjan, iterative). Ids are 0..k-1 in discovery order."""
    n = g.node_count
    out = g.out_arcs()
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp = [-1] * n
    counter = 0
    comp_count = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # Explicit DFS stack of (node, iterator position over out arcs).
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while i < len(out[v]):
                w = g.head(out[v][i])
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == v:
                        break
                comp_count += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


@dataclass(frozen=True)
class TopologicalOrder:
    """Either a rank per node (acyclic) or a directed cycle as arc ids."""

    order: tuple[int, ...] | None
    cycle: tuple[int, ...] | None

    @property
    def is_acyclic(self) -> bool:
        return self.order is not None


def topological_order(g: Digraph) -> TopologicalOrder:
    """Kahn's algorithm; on failure extracts a directed cycle as a witness.

    Smallest-id nodes are dequeued first so the ranks are deterministic.
    """
    n = g.node_count
    indeg = [0] * n
    for _, head in g.arcs:
        indeg[head] += 1
    out = g.out_arcs()
    ready = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(ready)
    rank = [-1] * n
    next_rank = 0
    while ready:
        v = heapq.heappop(ready)
        rank[v] = next_rank
        next_rank += 1
        for aid in out[v]:
            w = g.head(aid)
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if next_rank == n:
        return TopologicalOrder(order=tuple(rank), cycle=None)
    return TopologicalOrder(order=None, cycle=tuple(_find_directed_cycle(g, rank)))


def _find_directed_cycle(g: Digraph, rank: list[int]) -> list[int]:
    """A directed cycle among the nodes Kahn's algorithm never released.

    Every unreleased node keeps an unreleased predecessor, so walking
    backwards along in-arcs must revisit a node.
    """
    remaining = {v for v in range(g.node_count) if rank[v] == -1}
    inc: list[list[int]] = [[] for _ in range(g.node_count)]
    for aid, (tail, head) in enumerate(g.arcs):
        if tail in remaining and head in remaining:
            inc[head].append(aid)
    start = min(remaining)
    seen_at: dict[int, int] = {}
    walk: list[int] = []
    v = start
    while v not in seen_at:
        seen_at[v] = len(walk)
        aid = min(inc[v])
        walk.append(aid)
        v = g.tail(aid)
    cycle = walk[seen_at[v]:]
    cycle.reverse()
    return cycle


def reachable_from(g: Digraph, start: int, allowed: Iterable[int] | None = None) -> set[int]:
    """Forward-reachability set of `start` using only the allowed arc ids."""
    allowed_set = set(range(g.arc_count)) if allowed is None else set(allowed)
    out: list[list[int]] = [[] for _ in range(g.node_count)]
    for aid in allowed_set:
        out[g.tail(aid)].append(aid)
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for aid in out[v]:
            w = g.head(aid)
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def reverse_reachable_to(g: Digraph, goal: int, allowed: Iterable[int] | None = None) -> set[int]:
    """Nodes that can reach `goal` using only the allowed arc ids."""
    allowed_set = set(range(g.arc_count)) if allowed is None else set(allowed)
    inc: list[list[int]] = [[] for _ in range(g.node_count)]
    for aid in allowed_set:
        inc[g.head(aid)].append(aid)
    seen = {goal}
    todo = [goal]
    while todo:
        v = todo.pop()
        for aid in inc[v]:
            w = g.tail(aid)
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def shortest_arc_path(g: Digraph, start: int, goal: int,
                      allowed: Iterable[int] | None = None) -> list[int] | None:
    """BFS path start->goal as an arc-id list, or None. Prefers smaller arc ids."""
    allowed_set = set(range(g.arc_count)) if allowed is None else set(allowed)
    out: list[list[int]] = [[] for _ in range(g.node_count)]
    for aid in sorted(allowed_set):
        out[g.tail(aid)].append(aid)
    prev_arc: dict[int, int] = {}
    seen = {start}
    frontier = [start]
    while frontier and goal not in seen:
        nxt = []
        for v in frontier:
            for aid in out[v]:
                w = g.head(aid)
                if w not in seen:
                    seen.add(w)
                    prev_arc[w] = aid
                    nxt.append(w)
        frontier = nxt
    if goal not in seen:
        return None
    path: list[int] = []
    v = goal
    while v != start:
        aid = prev_arc[v]
        path.append(aid)
        v = g.tail(aid)
    path.reverse()
    return path


def spanning_forest_max_weight(g: Digraph, restrict: Iterable[int],
                               w: WeightedGroundSet) -> set[int]:
    """Maximum-weight spanning forest of the undirected multigraph on `restrict`.

    Kruskal over arcs sorted by (weight desc, arc id asc); self-loops are
    never forest arcs. Per connected component the result is a spanning tree.
    """
    uf = UnionFind(g.node_count)
    forest: set[int] = set()
    for aid in sorted(restrict, key=lambda a: (-w[a], a)):
        tail, head = g.arcs[aid]
        if tail != head and uf.union(tail, head):
            forest.add(aid)
    return forest


def enumerate_st_paths(g: Digraph, st: StPair, cap: int = 100_000) -> list[frozenset[int]]:
    """All simple directed s-t paths as arc-id sets, lexicographic by arc-id tuple.

    Raises PathExplosion when more than `cap` paths exist: the instance is too
    large for brute force.
    """
    if cap < 1:
        raise InvalidInstance("cap must be >= 1")
    st.validate(g)
    if g.has_self_loop():
        raise InvalidInstance("self-loops are not allowed in path settings")
    out = g.out_arcs()
    # Prune to nodes that can still reach t; cuts hopeless branches early.
    can_reach_t = reverse_reachable_to(g, st.sink)
    if st.source not in can_reach_t:
        raise NoStPath(f"no path from {st.source} to {st.sink}")
    paths: list[tuple[int, ...]] = []
    on_path = [False] * g.node_count
    on_path[st.source] = True
    arc_stack: list[int] = []

    def visit(v: int) -> None:
        if v == st.sink:
            if len(paths) >= cap:
                raise PathExplosion(f"more than {cap} s-t paths")
            paths.append(tuple(arc_stack))
            return
        for aid in out[v]:
            w_node = g.head(aid)
            if on_path[w_node] or w_node not in can_reach_t:
                continue
            on_path[w_node] = True
            arc_stack.append(aid)
            visit(w_node)
            arc_stack.pop()
            on_path[w_node] = False

    visit(st.source)
    paths.sort(key=lambda p: tuple(sorted(p)))
    return [frozenset(p) for p in paths]
