"""Vertex cover to Roman {2}-domination on split graphs.

For a source graph with vertices ``v_0..v_{n-1}`` and edges ``e_0..e_{m-1}``
the split instance has ``2n + m`` vertices, numbered

* ``0 .. n-1``         shadows ``v'_i`` (pendant on ``v_i``),
* ``n .. 2n-1``        clique vertices ``v_i`` (pairwise adjacent),
* ``2n .. 2n+m-1``     edge-vertices ``e_j`` (adjacent to both endpoints).

A cover ``C`` maps to the labeling with 2 on ``C``'s clique vertices and 1 on
the shadows of the other vertices, of weight ``n + |C|``; conversely every
R2DF can be rewritten, without gaining weight, into one of that shape.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .checkers import as_labels, is_r2df, is_vertex_cover
from .errors import AssignmentError
from .graph import Graph, VertexSet, build_graph

SHADOW, CLIQUE, EDGE = "shadow", "clique", "edge"


@dataclass(frozen=True, eq=False)
class SplitInstance:
    graph: Graph
    source: Graph
    role: tuple[str, ...]
    # Source vertex for shadow/clique vertices, source edge index for edge-vertices.
    origin: tuple[int, ...]
    source_edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return self.source.n

    def shadow(self, i: int) -> int:
        return i

    def clique(self, i: int) -> int:
        return self.source.n + i

    def edge_vertex(self, j: int) -> int:
        return 2 * self.source.n + j

    def check_invariants(self) -> None:
        g, n = self.graph, self.source.n
        for i in range(n):
            for k in range(i + 1, n):
                assert g.has_edge(self.clique(i), self.clique(k))
            assert g.neighbors(self.shadow(i)).tolist() == [self.clique(i)]
        for j, (u, v) in enumerate(self.source_edges):
            assert g.neighbors(self.edge_vertex(j)).tolist() == [self.clique(u), self.clique(v)]


def vc_to_r2d(g: Graph) -> SplitInstance:
    n = g.n
    src_edges = tuple(g.edges())
    edges = [(n + i, n + k) for i in range(n) for k in range(i + 1, n)]
    edges += [(i, n + i) for i in range(n)]
    for j, (u, v) in enumerate(src_edges):
        edges += [(n + u, 2 * n + j), (n + v, 2 * n + j)]
    role = (SHADOW,) * n + (CLIQUE,) * n + (EDGE,) * len(src_edges)
    origin = tuple(range(n)) * 2 + tuple(range(len(src_edges)))
    inst = SplitInstance(build_graph(2 * n + len(src_edges), edges), g, role, origin, src_edges)
    inst.check_invariants()
    return inst


def cover_to_assignment(inst: SplitInstance, cover) -> np.ndarray:
    cover = sorted(set(int(v) for v in cover))
    if not is_vertex_cover(inst.source, cover):
        raise AssignmentError("not a vertex cover of the source graph")
    n = inst.n
    f = np.zeros(inst.graph.n, dtype=np.int64)
    f[:n] = 1
    for v in cover:
        f[inst.clique(v)] = 2
        f[inst.shadow(v)] = 0
    return f


def normalize(inst: SplitInstance, a) -> np.ndarray:
    """Rewrite an R2DF of the split instance into cover shape.

    Passes run in a fixed order until nothing changes; none of them increases
    the weight or breaks validity:

    1. a shadow labelled 2 moves its 2 onto its clique vertex;
    2. an edge-vertex labelled 2 moves its 2 onto its lower endpoint;
    3. an edge-vertex labelled 1 is cleared, first upgrading an endpoint
       whose shadow is 1 (shadow cleared) unless an endpoint is already 2;
    4. a clique vertex labelled 1 becomes 2 and its shadow is cleared;
    5. a clique vertex labelled 2 clears its shadow.
    """
    f = as_labels(a, inst.graph.n).copy()
    n = inst.n
    shadow = slice(0, n)
    clique = slice(n, 2 * n)
    changed = True
    while changed:
        changed = False
        for i in np.flatnonzero(f[shadow] == 2):
            f[inst.shadow(i)], f[inst.clique(i)] = 0, 2
            changed = True
        for j, (u, v) in enumerate(inst.source_edges):
            e = inst.edge_vertex(j)
            if f[e] == 2:
                f[e], f[inst.clique(u)] = 0, 2
                changed = True
            elif f[e] == 1:
                if f[inst.clique(u)] != 2 and f[inst.clique(v)] != 2:
                    f[inst.clique(u)], f[inst.shadow(u)] = 2, 0
                f[e] = 0
                changed = True
        for i in np.flatnonzero(f[clique] == 1):
            f[inst.clique(i)], f[inst.shadow(i)] = 2, 0
            changed = True
        for i in np.flatnonzero((f[clique] == 2) & (f[shadow] > 0)):
            f[inst.shadow(i)] = 0
            changed = True
    return f


def assignment_to_cover(inst: SplitInstance, a) -> VertexSet:
    """Vertex cover of the source read off a normalized R2DF.

    Normalization always leaves some clique vertex at 2, so members whose
    edges are all covered by other members are dropped afterwards (ascending
    order).  The result is never larger than ``weight(a) - n``.
    """
    if not is_r2df(inst.graph, a):
        raise AssignmentError("assignment is not a Roman {2}-dominating function")
    f = normalize(inst, a)
    n = inst.n
    cover = set(np.flatnonzero(f[n:2 * n] == 2).tolist())
    for v in sorted(cover):
        if all(w in cover and w != v for w in inst.source.neighbors(v).tolist()):
            cover.discard(v)
    return tuple(sorted(cover))
