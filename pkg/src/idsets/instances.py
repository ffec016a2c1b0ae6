"""Generators for the hardness-family and benchmark instances used in tests.

Every generator records construction metadata (special arc sets, parameters)
so tests can assert construction-level facts instead of re-deriving them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidInstance, NotIdentifying
from .explicit import SolutionList
from .graphs import Digraph, StPair
from .paths import verify_path_identifying_dag


@dataclass(frozen=True)
class GeneratedInstance:
    graph: Digraph | None
    st: StPair | None
    metadata: dict = field(default_factory=dict)
    solutions: SolutionList | None = None


def gen_tight_gap_family(k: int) -> GeneratedInstance:
    """The tight approximation-gap family.

    Nodes v_0..v_{2k+1} with s = v_0, t = v_{2k+1}; jump arcs (v_{2i}, v_{2j+1})
    for 0 <= i <= j <= k, then the k marked arcs e_i = (v_{2i-1}, v_{2i}).
    Path optimum is the k marked arcs; flow optimum has size k(k+1)/2.
    """
    if k < 1:
        raise InvalidInstance("k must be >= 1")
    arcs: list[tuple[int, int]] = []
    for i in range(k + 1):
        for j in range(i, k + 1):
            arcs.append((2 * i, 2 * j + 1))
    marked = []
    for i in range(1, k + 1):
        marked.append(len(arcs))
        arcs.append((2 * i - 1, 2 * i))
    g = Digraph(2 * k + 2, arcs)
    st = StPair(0, 2 * k + 1)
    meta = {"construction": "tight-gap", "k": k, "marked_arcs": marked}
    return GeneratedInstance(graph=g, st=st, metadata=meta)


def gen_vertex_cover_dag(vc_vertices: int, vc_edges: Sequence[tuple[int, int]],
                         ell: int) -> GeneratedInstance:
    """Vertex-cover reduction DAG: s -> u_e -> v_i -> t with ell node copies.

    Arc blocks in id order: E_s (one arc per edge), E' (per edge, per endpoint,
    per copy), then for each copy i the block E_i (one arc per vertex).
    """
    edges = [tuple(sorted((int(a), int(b)))) for a, b in vc_edges]
    if not edges:
        raise InvalidInstance("the vertex-cover graph needs at least one edge")
    if ell < 1:
        raise InvalidInstance("ell must be >= 1")
    for a, b in edges:
        if not (0 <= a < vc_vertices and 0 <= b < vc_vertices) or a == b:
            raise InvalidInstance(f"bad edge ({a},{b})")
    s_node, t_node = 0, 1
    u_node = {ei: 2 + ei for ei in range(len(edges))}

    def copy_node(v: int, i: int) -> int:
        return 2 + len(edges) + v * ell + (i - 1)

    node_count = 2 + len(edges) + vc_vertices * ell
    arcs: list[tuple[int, int]] = []
    e_s = []
    for ei in range(len(edges)):
        e_s.append(len(arcs))
        arcs.append((s_node, u_node[ei]))
    e_mid = []
    mid_info = []  # (edge index, vertex, copy) per E' arc
    for ei, (a, b) in enumerate(edges):
        for v in (a, b):
            for i in range(1, ell + 1):
                e_mid.append(len(arcs))
                mid_info.append((ei, v, i))
                arcs.append((u_node[ei], copy_node(v, i)))
    tail_arcs = []  # (vertex, copy, arc id) per E_i arc
    for i in range(1, ell + 1):
        for v in range(vc_vertices):
            tail_arcs.append((v, i, len(arcs)))
            arcs.append((copy_node(v, i), t_node))
    g = Digraph(node_count, arcs)
    st = StPair(s_node, t_node)
    meta = {
        "construction": "vc-dag",
        "ell": ell,
        "vc_vertices": vc_vertices,
        "vc_edges": [list(e) for e in edges],
        "E_s": e_s,
        "E_prime": e_mid,
        "mid_info": mid_info,
        "tail_arcs": tail_arcs,
    }
    return GeneratedInstance(graph=g, st=st, metadata=meta)


@dataclass(frozen=True)
class ExtractedCover:
    normalized_set: frozenset[int]
    covers: tuple[frozenset[int], ...]  # one vertex set per copy index


def extract_vertex_cover(inst: GeneratedInstance, s: Iterable[int]) -> ExtractedCover:
    """Rewrite an identifying set off the middle arcs and read off vertex covers.

    Repeatedly replaces a middle arc (u_e, v_i) in S by tail/source arcs that
    carry the same information; each rewrite preserves the identifying
    property. Afterwards U_i = {v : (v_i, t) in S} covers every edge.
    """
    meta = inst.metadata
    if meta.get("construction") != "vc-dag":
        raise InvalidInstance("instance is not a vc-dag construction")
    g, st = inst.graph, inst.st
    assert g is not None and st is not None
    ok, witness = verify_path_identifying_dag(g, st, s)
    if not ok:
        raise NotIdentifying(witness)
    ell: int = meta["ell"]
    edges: list[list[int]] = meta["vc_edges"]
    e_s: list[int] = meta["E_s"]
    mid_ids: list[int] = meta["E_prime"]
    mid_info: list[tuple[int, int, int]] = meta["mid_info"]
    arc_of_mid = {info: aid for aid, info in zip(mid_ids, mid_info)}
    tail_arc = {(v, i): aid for v, i, aid in meta["tail_arcs"]}
    incident = {v: [ei for ei, e in enumerate(edges) if v in e]
                for v in range(meta["vc_vertices"])}

    current = set(int(a) for a in s)
    mid_id_set = set(mid_ids)
    while True:
        mids_present = sorted(a for a in current if a in mid_id_set)
        if not mids_present:
            break
        aid = mids_present[0]
        ei, v, i = mid_info[mid_ids.index(aid)]
        others = [ej for ej in incident[v] if ej != ei]
        if e_s[ei] in current or all(e_s[ej] in current for ej in others):
            current.discard(aid)
            current.add(tail_arc[(v, i)])
            continue
        ej = min(ej for ej in others if e_s[ej] not in current)
        for copy in range(1, ell + 1):
            current.discard(arc_of_mid[(ei, v, copy)])
            current.discard(arc_of_mid.get((ej, v, copy), -1))
        current.add(e_s[ei])
        current.add(e_s[ej])
        for copy in range(1, ell + 1):
            current.add(tail_arc[(v, copy)])

    covers = []
    for i in range(1, ell + 1):
        cover = frozenset(v for v in range(meta["vc_vertices"])
                          if tail_arc[(v, i)] in current)
        for a, b in edges:
            assert a in cover or b in cover, "rewritten set must induce vertex covers"
        covers.append(cover)
    return ExtractedCover(normalized_set=frozenset(current), covers=tuple(covers))


def gen_bundle_instance(g: Digraph, st: StPair, arc: int,
                        bundle_size: int) -> GeneratedInstance:
    """Replace one arc by a bundle of parallel arcs (ids of the rest are stable).

    The original arc id becomes the first bundle member; the remaining
    bundle_size - 1 copies are appended at the end.
    """
    if bundle_size < 2:
        raise InvalidInstance("bundle_size must be >= 2")
    if not (0 <= arc < g.arc_count):
        raise InvalidInstance(f"arc id {arc} out of range")
    tail, head = g.arcs[arc]
    arcs = list(g.arcs) + [(tail, head)] * (bundle_size - 1)
    bundle = [arc] + list(range(g.arc_count, g.arc_count + bundle_size - 1))
    meta = {"construction": "bundle", "bundle": bundle, "replaced_arc": arc}
    return GeneratedInstance(graph=Digraph(g.node_count, arcs), st=st, metadata=meta)


def gen_random_dag(nodes: int, arc_prob: float, seed: int) -> GeneratedInstance:
    """Seeded random DAG: arcs follow a random permutation; s/t are its endpoints."""
    if nodes < 2 or not (0.0 <= arc_prob <= 1.0):
        raise InvalidInstance("need nodes >= 2 and arc_prob in [0, 1]")
    rng = random.Random(seed)
    perm = list(range(nodes))
    rng.shuffle(perm)
    arcs = []
    for i in range(nodes):
        for j in range(i + 1, nodes):
            if rng.random() < arc_prob:
                arcs.append((perm[i], perm[j]))
    meta = {"construction": "random-dag", "nodes": nodes, "arc_prob": arc_prob,
            "seed": seed}
    return GeneratedInstance(graph=Digraph(nodes, arcs),
                             st=StPair(perm[0], perm[-1]), metadata=meta)


def gen_random_digraph(nodes: int, arc_prob: float, seed: int) -> GeneratedInstance:
    """Seeded random digraph over all ordered pairs; s = 0, t = nodes - 1."""
    if nodes < 2 or not (0.0 <= arc_prob <= 1.0):
        raise InvalidInstance("need nodes >= 2 and arc_prob in [0, 1]")
    rng = random.Random(seed)
    arcs = [(u, v) for u in range(nodes) for v in range(nodes)
            if u != v and rng.random() < arc_prob]
    meta = {"construction": "random-digraph", "nodes": nodes, "arc_prob": arc_prob,
            "seed": seed}
    return GeneratedInstance(graph=Digraph(nodes, arcs), st=StPair(0, nodes - 1),
                             metadata=meta)
