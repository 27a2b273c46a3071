import itertools

import pytest
from hypothesis import strategies as st

from r2dom.graph import build_graph
from r2dom.oracle import gen_random_block_graph, gen_random_tree


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


@st.composite
def random_trees(draw, max_n=12):
    return gen_random_tree(draw(st.integers(1, max_n)), draw(st.integers(0, 2**32)))


@st.composite
def random_block_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    return gen_random_block_graph(n, draw(st.integers(2, 4)), draw(st.integers(0, 2**32)))


@pytest.fixture
def graph_file(tmp_path):
    def write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)
    return write
