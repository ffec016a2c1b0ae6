"""Graph-core primitives against hand examples and independent oracles."""

from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st_

from idsets.errors import InvalidInstance, NoStPath, PathExplosion
from idsets.graphs import (
    Digraph,
    StPair,
    UnionFind,
    WeightedGroundSet,
    enumerate_st_paths,
    reachable_from,
    spanning_forest_max_weight,
    strongly_connected_components,
    topological_order,
)
from idsets.instances import gen_tight_gap_family

from .helpers import oracle_enumerate_paths, seeded_multigraphs


def test_digraph_validates_arc_ids():
    with pytest.raises(InvalidInstance):
        Digraph(2, [(0, 2)])
    g = Digraph(3, [(0, 1), (1, 2), (2, 2)])
    assert g.arc_count == 3
    assert g.has_self_loop()


def test_st_pair_rejects_equal_endpoints():
    with pytest.raises(InvalidInstance):
        StPair(1, 1)


def test_weights_reject_negative():
    with pytest.raises(InvalidInstance):
        WeightedGroundSet([1, "-1/2"])


class TestStronglyConnectedComponents:
    def test_mutual_reachability_merges(self):
        comp = strongly_connected_components(Digraph(2, [(0, 1), (1, 0)]))
        assert comp[0] == comp[1]

    def test_one_way_arc_separates(self):
        comp = strongly_connected_components(Digraph(2, [(0, 1)]))
        assert comp[0] != comp[1]

    def test_gap_family_is_a_dag(self):
        inst = gen_tight_gap_family(3)
        comp = strongly_connected_components(inst.graph)
        assert len(set(comp)) == inst.graph.node_count

    def test_matches_networkx_on_random_multigraphs(self):
        for g, _ in seeded_multigraphs(60, seed=11, allow_self_loops=True):
            dg = nx.MultiDiGraph()
            dg.add_nodes_from(range(g.node_count))
            dg.add_edges_from((t, h) for t, h in g.arcs)
            expected = {frozenset(c) for c in nx.strongly_connected_components(dg)}
            comp = strongly_connected_components(g)
            groups: dict[int, set[int]] = {}
            for v, c in enumerate(comp):
                groups.setdefault(c, set()).add(v)
            assert {frozenset(c) for c in groups.values()} == expected


class TestTopologicalOrder:
    def test_chain(self):
        topo = topological_order(Digraph(3, [(0, 1), (1, 2)]))
        assert topo.order == (0, 1, 2)

    def test_two_cycle_witness(self):
        topo = topological_order(Digraph(2, [(0, 1), (1, 0)]))
        assert not topo.is_acyclic
        assert sorted(topo.cycle) == [0, 1]

    def test_self_loop_is_a_cycle(self):
        topo = topological_order(Digraph(1, [(0, 0)]))
        assert topo.cycle == (0,)

    def test_gap_family_k1_order(self):
        inst = gen_tight_gap_family(1)
        topo = topological_order(inst.graph)
        ranks = topo.order
        # chain s < v1 < v2 < t is one of the valid orders; ranks must respect arcs
        for tail, head in inst.graph.arcs:
            assert ranks[tail] < ranks[head]

    def test_cycle_witness_is_a_directed_cycle(self):
        for g, _ in seeded_multigraphs(80, seed=5, allow_self_loops=True):
            topo = topological_order(g)
            if topo.is_acyclic:
                for tail, head in g.arcs:
                    if tail != head:
                        assert topo.order[tail] < topo.order[head]
            else:
                cyc = list(topo.cycle)
                for aid, nxt in zip(cyc, cyc[1:] + cyc[:1]):
                    assert g.head(aid) == g.tail(nxt)


class TestReachability:
    def test_chain_full(self):
        g = Digraph(3, [(0, 1), (1, 2)])
        assert reachable_from(g, 0) == {0, 1, 2}

    def test_chain_restricted(self):
        g = Digraph(3, [(0, 1), (1, 2)])
        assert reachable_from(g, 0, {1}) == {0}

    def test_restriction_subset_of_full(self):
        rng = random.Random(3)
        for g, _ in seeded_multigraphs(40, seed=7):
            allowed = {a for a in range(g.arc_count) if rng.random() < 0.6}
            start = rng.randrange(g.node_count)
            assert reachable_from(g, start, allowed) <= reachable_from(g, start)


class TestSpanningForest:
    def test_parallel_arcs_pick_heavier(self):
        g = Digraph(2, [(0, 1), (1, 0)])
        w = WeightedGroundSet([1, 2])
        assert spanning_forest_max_weight(g, {0, 1}, w) == {1}

    def test_triangle_drops_lightest(self):
        g = Digraph(3, [(0, 1), (1, 2), (0, 2)])
        w = WeightedGroundSet([3, 2, 1])
        assert spanning_forest_max_weight(g, {0, 1, 2}, w) == {0, 1}

    def test_gap_family_unit_weights_has_tree_size(self):
        inst = gen_tight_gap_family(3)
        g = inst.graph
        forest = spanning_forest_max_weight(g, range(g.arc_count),
                                            WeightedGroundSet.uniform(g.arc_count))
        assert len(forest) == g.node_count - 1

    def test_forest_spans_and_is_acyclic(self):
        rng = random.Random(12)
        for g, _ in seeded_multigraphs(60, seed=13, allow_self_loops=True):
            restrict = {a for a in range(g.arc_count) if rng.random() < 0.8}
            w = WeightedGroundSet([rng.randint(0, 5) for _ in range(g.arc_count)])
            forest = spanning_forest_max_weight(g, restrict, w)
            # acyclic: re-run a union-find; spanning: adding any restrict arc
            # inside one component closes a cycle
            uf = UnionFind(g.node_count)
            for aid in forest:
                assert uf.union(*g.arcs[aid])
            for aid in restrict - forest:
                tail, head = g.arcs[aid]
                assert tail == head or uf.find(tail) == uf.find(head)

    def test_matches_networkx_max_weight(self):
        rng = random.Random(21)
        for g, _ in seeded_multigraphs(40, seed=22):
            w = WeightedGroundSet([rng.randint(1, 8) for _ in range(g.arc_count)])
            forest = spanning_forest_max_weight(g, range(g.arc_count), w)
            mg = nx.MultiGraph()
            mg.add_nodes_from(range(g.node_count))
            for aid, (t, h) in enumerate(g.arcs):
                mg.add_edge(t, h, weight=int(w[aid]))
            expected = sum(edge[-1]["weight"] for edge in
                           nx.maximum_spanning_edges(mg, data=True))
            assert w.total(forest) == expected


class TestEnumerateStPaths:
    def test_two_parallel_arcs(self):
        g = Digraph(2, [(0, 1), (0, 1)])
        assert enumerate_st_paths(g, StPair(0, 1)) == [frozenset({0}), frozenset({1})]

    def test_gap_family_k1_has_two_paths(self):
        inst = gen_tight_gap_family(1)
        assert len(enumerate_st_paths(inst.graph, inst.st)) == 2

    def test_vc_dag_path_count(self):
        from idsets.instances import gen_vertex_cover_dag

        for ell in (1, 2, 3):
            inst = gen_vertex_cover_dag(3, [(0, 1), (1, 2)], ell)
            assert len(enumerate_st_paths(inst.graph, inst.st)) == 4 * ell

    def test_cap_raises(self):
        g = Digraph(2, [(0, 1), (0, 1), (0, 1)])
        with pytest.raises(PathExplosion):
            enumerate_st_paths(g, StPair(0, 1), cap=2)

    def test_no_path_raises(self):
        with pytest.raises(NoStPath):
            enumerate_st_paths(Digraph(2, []), StPair(0, 1))

    def test_self_loop_rejected(self):
        with pytest.raises(InvalidInstance):
            enumerate_st_paths(Digraph(2, [(0, 1), (0, 0)]), StPair(0, 1))

    def test_agrees_with_recursive_oracle(self):
        for g, st in seeded_multigraphs(120, seed=31):
            try:
                got = set(enumerate_st_paths(g, st, cap=10_000))
            except NoStPath:
                got = None
            expected = oracle_enumerate_paths(g, st)
            if got is None:
                assert expected == set()
            else:
                assert got == expected

    def test_agrees_with_oracle_exhaustive_three_nodes(self):
        from .helpers import all_simple_digraphs

        for g in all_simple_digraphs(3):
            for s_node in range(3):
                for t_node in range(3):
                    if s_node == t_node:
                        continue
                    st = StPair(s_node, t_node)
                    expected = oracle_enumerate_paths(g, st)
                    try:
                        got = set(enumerate_st_paths(g, st, cap=1_000))
                    except NoStPath:
                        got = set()
                    assert got == expected

    @settings(max_examples=60, deadline=None)
    @given(data=st_.data())
    def test_paths_are_simple_and_connected(self, data):
        n = data.draw(st_.integers(2, 5), label="nodes")
        m = data.draw(st_.integers(1, 8), label="arcs")
        arcs = [
            (data.draw(st_.integers(0, n - 1)), data.draw(st_.integers(0, n - 1)))
            for _ in range(m)
        ]
        arcs = [(t, h) for t, h in arcs if t != h]
        if not arcs:
            return
        g = Digraph(n, arcs)
        st = StPair(0, n - 1)
        try:
            paths = enumerate_st_paths(g, st, cap=5_000)
        except NoStPath:
            return
        for path in paths:
            # walk the arcs: each path is a connected s-t walk without repeats
            heads = {g.head(a) for a in path}
            tails = {g.tail(a) for a in path}
            assert st.source in tails and st.sink in heads
            assert len(heads) == len(path) and len(tails) == len(path)
            nodes = tails | heads
            assert len(nodes) == len(path) + 1
