import math

import numpy as np
import pytest
from hypothesis import given, settings

from r2dom.checkers import is_ir2df, is_r2df
from r2dom.errors import NotATreeError
from r2dom.graph import build_graph, cycle_graph, empty_graph, path_graph, star_graph
from r2dom.oracle import all_labeled_trees, brute_gamma_r2, brute_i_r2
from r2dom.tree_dp import init_vector_tree, merge_tree, merge_tree_choices, root_vector, solve_ir2d_tree

from .conftest import random_trees

INF = math.inf
LEAF = (2, 1, INF, INF, 0)


def test_initial_vector():
    assert init_vector_tree() == LEAF


def test_merge_examples():
    p2 = merge_tree(LEAF, LEAF)
    assert p2 == (2, INF, 2, 1, INF)
    assert merge_tree(p2, LEAF) == (2, INF, 2, INF, INF)
    assert merge_tree(p2, (INF,) * 5) == (INF,) * 5


def test_merge_choices_agree_with_merge():
    vec, picks = merge_tree_choices((2, INF, 2, 1, INF), LEAF)
    assert vec == merge_tree((2, INF, 2, 1, INF), LEAF)
    assert picks[0] == (0, 4) and picks[4] is None


@pytest.mark.parametrize("g,expected", [
    (build_graph(1, []), 1), (path_graph(2), 2), (path_graph(4), 3), (star_graph(5), 2),
])
def test_small_values(g, expected):
    value, f = solve_ir2d_tree(g)
    assert value == expected
    assert is_ir2df(g, f) and f.sum() == value


def test_root_vector_p3():
    assert root_vector(path_graph(3), root=1) == (2, INF, 2, INF, INF)


@pytest.mark.parametrize("g", [cycle_graph(3), empty_graph(2), build_graph(0, [])])
def test_rejects_non_trees(g):
    with pytest.raises(NotATreeError):
        solve_ir2d_tree(g)


def test_exhaustive_n6_every_root():
    for g in all_labeled_trees(6):
        expected = brute_i_r2(g).optimum
        for root in range(g.n):
            value, f = solve_ir2d_tree(g, root)
            assert value == expected
            assert is_ir2df(g, f) and f.sum() == value


@given(random_trees(max_n=13))
@settings(max_examples=150, deadline=None)
def test_matches_oracle(g):
    value, f = solve_ir2d_tree(g)
    assert value == brute_i_r2(g).optimum
    assert is_ir2df(g, f) and int(f.sum()) == value
    assert brute_gamma_r2(g).optimum <= value


def test_large_path_certificate():
    g = path_graph(200001)
    value, f = solve_ir2d_tree(g)
    assert value == (g.n + 2) // 2
    assert is_ir2df(g, f) and is_r2df(g, f)
