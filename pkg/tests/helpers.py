"""Independent brute-force oracles and instance families for the test suite.

These deliberately avoid the library's own algorithms: path enumeration is a
plain recursive walk over an adjacency matrix, acyclicity goes through
networkx, and identifying checks are direct pairwise definitions.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

import networkx as nx

from idsets.graphs import Digraph, StPair


def oracle_enumerate_paths(g: Digraph, st: StPair) -> set[frozenset[int]]:
    """Reference enumerator: recursive walk over node adjacency, no pruning."""
    succ: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.node_count)}
    for aid, (tail, head) in enumerate(g.arcs):
        if tail != head:
            succ[tail].append((head, aid))
    found: set[frozenset[int]] = set()

    def walk(node: int, visited: set[int], arcs: tuple[int, ...]) -> None:
        if node == st.sink:
            found.add(frozenset(arcs))
            return
        for nxt, aid in succ[node]:
            if nxt not in visited:
                walk(nxt, visited | {nxt}, arcs + (aid,))

    walk(st.source, {st.source}, ())
    return found


def oracle_identifying_for_paths(g: Digraph, st: StPair, s: set[int]) -> bool:
    """Definition check: all path traces on S pairwise distinct."""
    traces = [p & s for p in oracle_enumerate_paths(g, st)]
    return len(traces) == len(set(traces))


def oracle_undirected_acyclic(g: Digraph, arcs: set[int]) -> bool:
    """Forest test via networkx component counting (independent of union-find)."""
    mg = nx.MultiGraph()
    touched = set()
    for aid in arcs:
        tail, head = g.arcs[aid]
        if tail == head:
            return False
        mg.add_edge(tail, head)
        touched |= {tail, head}
    if not touched:
        return True
    return mg.number_of_edges() == len(touched) - nx.number_connected_components(mg)


def oracle_directed_cycles(g: Digraph) -> list[list[int]]:
    """All simple directed cycles as arc-id lists (via networkx node cycles)."""
    dg = nx.MultiDiGraph()
    for aid, (tail, head) in enumerate(g.arcs):
        dg.add_edge(tail, head, key=aid)
    cycles = []
    for nodes in nx.simple_cycles(dg):
        ring = list(nodes) + [nodes[0]]
        # expand node cycles into arc cycles (all parallel-arc choices)
        arc_options = []
        for a, b in zip(ring, ring[1:]):
            arc_options.append([k for (u, v, k) in dg.out_edges(a, keys=True) if v == b])
        for combo in product(*arc_options):
            cycles.append(list(combo))
    return cycles


def all_simple_digraphs(n: int):
    """Every simple digraph on n labeled nodes (no self-loops)."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for mask in range(1 << len(pairs)):
        arcs = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield Digraph(n, arcs)


def seeded_multigraphs(count: int, seed: int, min_nodes: int = 4, max_nodes: int = 6,
                       max_arcs: int = 9, allow_self_loops: bool = False):
    """Reproducible random multigraph family (parallel arcs allowed)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(min_nodes, max_nodes)
        m = rng.randint(1, max_arcs)
        arcs = []
        for _ in range(m):
            tail = rng.randrange(n)
            head = rng.randrange(n)
            if not allow_self_loops:
                while head == tail:
                    head = rng.randrange(n)
            arcs.append((tail, head))
        out.append((Digraph(n, arcs), StPair(0, n - 1)))
    return out


def seeded_dags(count: int, seed: int, min_nodes: int = 3, max_nodes: int = 7,
                arc_prob: float = 0.5):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(min_nodes, max_nodes)
        perm = list(range(n))
        rng.shuffle(perm)
        arcs = []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < arc_prob:
                    arcs.append((perm[i], perm[j]))
        out.append((Digraph(n, arcs), StPair(perm[0], perm[-1])))
    return out


def random_weights(rng: random.Random, size: int, max_num: int = 9,
                   max_den: int = 4) -> list[Fraction]:
    return [Fraction(rng.randint(0, max_num), rng.randint(1, max_den))
            for _ in range(size)]


def all_subsets(elements) -> list[frozenset[int]]:
    items = sorted(elements)
    out = []
    for size in range(len(items) + 1):
        for combo in combinations(items, size):
            out.append(frozenset(combo))
    return out


def has_st_path(g: Digraph, st: StPair) -> bool:
    dg = nx.MultiDiGraph()
    dg.add_nodes_from(range(g.node_count))
    dg.add_edges_from((t, h) for t, h in g.arcs)
    return nx.has_path(dg, st.source, st.sink)


def min_vertex_cover_size(n: int, edges: list[tuple[int, int]]) -> int:
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            chosen = set(combo)
            if all(a in chosen or b in chosen for a, b in edges):
                return size
    raise AssertionError("unreachable")
