import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from r2dom.decomposition import (
    BlockNode, CutVertex, NodeKind, _biconnected, block_cut_tree, classify_block,
    is_block_graph, tree_ordering,
)
from r2dom.errors import (
    CompleteGraphError, DisconnectedGraphError, NotATreeError, NotBlockGraphError,
)
from r2dom.graph import (
    build_graph, complete_graph, connected_components, cycle_graph, empty_graph,
    induced_subgraph, is_clique, path_graph, star_graph,
)
from r2dom.oracle import caterpillar

from .conftest import random_block_graphs, random_trees


def _cut_vertices_by_removal(g):
    base = len(connected_components(g))
    cuts = []
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        if len(connected_components(induced_subgraph(g, rest))) > base:
            cuts.append(v)
    return cuts


def test_tree_ordering_small_path():
    od = tree_ordering(path_graph(3), root=1)
    assert od.order.tolist() == [0, 2, 1]
    assert od.root == 1
    assert od.father.tolist() == [1, -1, 1]
    assert od.father_of(1) is None and od.father_of(0) == 1


@given(random_trees(max_n=40))
def test_tree_ordering_father_is_unique_later_neighbor(g):
    od = tree_ordering(g, root=g.n - 1)
    pos = od.position
    assert sorted(od.order.tolist()) == list(range(g.n))
    assert od.root == g.n - 1
    for v in od.order[:-1]:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        assert later == [od.father[v]]
    assert np.array_equal(od.father_position[:-1], pos[od.father[od.order[:-1]]])


@pytest.mark.parametrize("g", [cycle_graph(4), empty_graph(2), build_graph(0, [])])
def test_tree_ordering_rejects_non_trees(g):
    with pytest.raises(NotATreeError):
        tree_ordering(g)


def test_tree_ordering_bad_root():
    with pytest.raises(ValueError):
        tree_ordering(path_graph(3), root=5)


@pytest.mark.parametrize("h,i,expected", [(3, 3, 0), (3, 2, 1), (4, 1, 2), (9, 0, 2), (2, 1, 1)])
def test_classify_block(h, i, expected):
    assert classify_block(h, i) == expected


@pytest.mark.parametrize("h,i", [(0, 0), (2, 3), (3, -1)])
def test_classify_block_invalid(h, i):
    with pytest.raises(ValueError):
        classify_block(h, i)


def test_block_cut_tree_of_two_triangles():
    # Triangles {0,1,2} and {2,3,4} share vertex 2; 4 has a pendant 5.
    g = build_graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)])
    t = block_cut_tree(g)
    assert t.cut_vertices.tolist() == [2, 4]
    blocks = sorted(t.block_members(b) for b in range(t.n_blocks))
    assert blocks == [(0, 1, 2), (2, 3, 4), (4, 5)]
    types = {t.block_members(b): int(t.block_type[b]) for b in range(t.n_blocks)}
    assert types == {(0, 1, 2): 2, (2, 3, 4): 1, (4, 5): 1}
    assert t.node_kind.tolist() == [NodeKind.CUT] * 2 + [NodeKind.BLOCK] * 3
    assert t.nodes[0] == CutVertex(2) and isinstance(t.nodes[-1], BlockNode)
    assert len(t.tree_edges()) == t.node_count - 1


def test_block_cut_tree_errors():
    with pytest.raises(CompleteGraphError):
        block_cut_tree(complete_graph(4))
    with pytest.raises(DisconnectedGraphError):
        block_cut_tree(empty_graph(3))
    with pytest.raises(NotBlockGraphError) as err:
        block_cut_tree(cycle_graph(4))
    u, v = err.value.witness
    assert not cycle_graph(4).has_edge(u, v)


def test_is_block_graph():
    assert is_block_graph(path_graph(5))
    assert is_block_graph(complete_graph(5))
    assert is_block_graph(caterpillar([1, 0, 2]))
    assert is_block_graph(build_graph(1, []))
    assert not is_block_graph(cycle_graph(5))
    assert not is_block_graph(empty_graph(2))
    assert not is_block_graph(build_graph(0, []))
    # K4 minus an edge is biconnected but not a clique.
    assert not is_block_graph(build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]))


def _check_block_cut_tree(g):
    t = block_cut_tree(g)
    assert t.cut_vertices.tolist() == _cut_vertices_by_removal(g)
    # Every edge lies in exactly one block and every block is a clique.
    owners = {}
    for b in range(t.n_blocks):
        members = t.block_members(b)
        assert is_clique(g, members)
        for e in itertools.combinations(members, 2):
            assert e not in owners
            owners[e] = b
    assert set(owners) == set(g.edges())
    for b in range(t.n_blocks):
        ncut = len(t.block_cutset(b))
        assert t.block_ncut[b] == ncut
        assert t.block_type[b] == classify_block(len(t.block_members(b)), ncut)
    # T_G is a bipartite tree whose edges are the (cut-vertex, block) incidences.
    edges = t.tree_edges()
    assert len(edges) == t.node_count - 1
    for a, b in edges:
        assert (a < t.n_cut) != (b < t.n_cut)
        c, blk = (a, b) if a < t.n_cut else (b, a)
        assert int(t.cut_vertices[c]) in t.block_members(blk - t.n_cut)
    od = t.ordering()
    assert od.root == t.root == t.node_count - 1
    assert sorted(od.order.tolist()) == list(range(t.node_count))


@given(random_block_graphs(max_n=14))
@settings(max_examples=200)
def test_block_cut_tree_properties(g):
    if g.n < 2 or g.m == g.n * (g.n - 1) // 2:
        return
    _check_block_cut_tree(g)


def test_all_small_block_graphs_against_removal_oracle():
    checked = 0
    for n in range(3, 7):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = build_graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
            if g.m == len(pairs) or not is_block_graph(g):
                continue
            _check_block_cut_tree(g)
            checked += 1
    assert checked > 100


def test_star_and_path_shapes():
    t = block_cut_tree(star_graph(4))
    assert t.cut_vertices.tolist() == [0] and t.n_blocks == 4
    t = block_cut_tree(path_graph(5))
    assert t.cut_vertices.tolist() == [1, 2, 3]
    assert sorted(t.block_type.tolist()) == [0, 0, 1, 1]


def _blocks_are_cliques_by_tarjan(g):
    _, bptr, bverts, reached = _biconnected(g.indptr, g.indices)
    if reached != g.n:
        return False
    return all(is_clique(g, bverts[bptr[b]:bptr[b + 1]].tolist()) for b in range(len(bptr) - 1))


def test_is_block_graph_matches_definition_exhaustively():
    for n in range(2, 7):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = build_graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
            expected = _blocks_are_cliques_by_tarjan(g)
            assert is_block_graph(g) == expected, g.edges()
            if expected or g.m == len(pairs):
                continue
            if len(connected_components(g)) == 1:
                with pytest.raises(NotBlockGraphError) as err:
                    block_cut_tree(g)
                u, v = err.value.witness
                assert not g.has_edge(u, v)
