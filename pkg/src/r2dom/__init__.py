"""Exact solvers for Roman {2}-domination problems.

* :func:`solve_ir2d_tree` - independent Roman {2}-domination number of a tree.
* :func:`solve_r2d_block` - Roman {2}-domination number of a block graph.

Both run in linear time and return a certificate labeling.
"""

from .block_dp import solve_r2d_block
from .checkers import is_induced_r2df_star, is_ir2df, is_r2df, is_vertex_cover, weight
from .decomposition import block_cut_tree, classify_block, is_block_graph, tree_ordering
from .graph import Graph, build_graph, connected_components, is_clique, is_tree
from .oracle import brute_gamma_r2, brute_i_r2, brute_min_vertex_cover
from .reduction import assignment_to_cover, cover_to_assignment, vc_to_r2d
from .tree_dp import solve_ir2d_tree

__version__ = "0.1.0"
