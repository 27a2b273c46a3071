import numpy as np
import pytest
from hypothesis import given, strategies as st

from r2dom.checkers import (
    as_labels, is_induced_r2df_star, is_ir2df, is_r2df, is_vertex_cover, weight,
)
from r2dom.decomposition import block_cut_tree
from r2dom.errors import AssignmentError
from r2dom.graph import build_graph, complete_graph, cycle_graph, path_graph, star_graph

from .conftest import graphs


def _slow_r2df(g, f):
    return all(f[v] > 0 or sum(f[w] for w in g.neighbors(v)) >= 2 for v in range(g.n))


def _slow_independent(g, f):
    return all(not (f[u] and f[v]) for u, v in g.edges())


def test_as_labels_accepts_sequences_and_dicts():
    assert as_labels([0, 1, 2], 3).tolist() == [0, 1, 2]
    assert as_labels({2: 2, 0: 1, 1: 0}, 3).tolist() == [1, 0, 2]


@pytest.mark.parametrize("a", [[0, 1], [0, 1, 3], [-1, 0, 0], {5: 1}])
def test_as_labels_rejects(a):
    with pytest.raises(AssignmentError):
        as_labels(a, 3)


def test_path_examples():
    p = path_graph(3)
    assert is_r2df(p, [0, 2, 0]) and is_ir2df(p, [0, 2, 0])
    assert not is_r2df(p, [0, 1, 0])
    assert is_r2df(p, [1, 0, 1]) and is_ir2df(p, [1, 0, 1])
    assert is_r2df(p, [1, 1, 1]) and not is_ir2df(p, [1, 1, 1])
    assert weight([1, 0, 2]) == 3


def test_complete_graph_two_ones():
    k = complete_graph(5)
    assert is_r2df(k, [1, 1, 0, 0, 0])
    assert not is_ir2df(k, [1, 1, 0, 0, 0])
    assert is_ir2df(k, [2, 0, 0, 0, 0])


def test_vertex_cover():
    c = cycle_graph(4)
    assert is_vertex_cover(c, [0, 2])
    assert not is_vertex_cover(c, [0, 1])
    assert is_vertex_cover(build_graph(3, []), [])


@given(graphs(), st.data())
def test_checkers_match_definition(g, data):
    f = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    assert is_r2df(g, f) == _slow_r2df(g, f)
    assert is_ir2df(g, f) == (_slow_r2df(g, f) and _slow_independent(g, f))
    if is_ir2df(g, f):
        assert is_r2df(g, f)


def test_induced_star_conditions():
    # Star K_{1,3}: cut-vertex 0 and three type-1 blocks {0, leaf}.
    t = block_cut_tree(star_graph(3))
    assert t.n_cut == 1 and t.block_type.tolist() == [1, 1, 1]
    assert is_induced_r2df_star(t, [2, 0, 0, 0])
    assert is_induced_r2df_star(t, [0, 1, 1, 1])
    assert not is_induced_r2df_star(t, [0, 1, 0, 0])   # a leaf block is short
    assert not is_induced_r2df_star(t, [0, 2, 1, 1])   # block value above 1
    # Path 0-1-2: blocks {0,1} and {1,2}.
    t = block_cut_tree(path_graph(3))
    assert is_induced_r2df_star(t, [2, 0, 0])
    assert not is_induced_r2df_star(t, [1, 0, 0])
