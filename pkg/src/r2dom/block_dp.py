"""Roman {2}-domination number of a block graph in linear time.

The DP runs over the block-cutpoint tree on labelings ``f*`` of its nodes: a
cut-vertex carries its own label and a block node carries the label of its
non-cut vertices (only type-1 blocks may be non-zero).

Cut-vertex root ``r`` (slot 6 unused)::

    A1  valid, f*(r) = 2
    A2  valid, f*(r) = 1
    A3  valid, f*(r) = 0
    A4  f*(r) = 0, r still short by 1 (fixable by a parent block worth 1)
    A5  f*(r) = 0, r still short by 2

Block root ``h`` with ``s = f*(N[h])``::

    B1  valid, s >= 2
    B2  valid, s = 1
    B3  valid, s = 0
    B4  s = 1, something in the block still short by 1
    B5  s = 0, something in the block still short by 1
    B6  s = 0, something in the block still short by 2

Merges are pure functions of the pre-merge vectors.  In particular the block
rules for B4, B5 and B6 read B2, B3 and B5 of the parent *before* the merge;
updating the slots in place, top to bottom, would let them read values that
already include the child and produces wrong optima.
"""

from __future__ import annotations

import numpy as np

from . import _minplus
from ._minplus import INF
from .checkers import as_labels, is_induced_r2df_star
from .decomposition import BlockCutTree, NodeKind, block_cut_tree
from .errors import AssignmentError, DisconnectedGraphError
from .graph import Graph, is_complete

A1, A2, A3, A4, A5 = range(5)
B1, B2, B3, B4, B5, B6 = range(6)

# Cut-vertex parent absorbing a block child.
CUT_RULES = (
    ((A1, B1), (A1, B2), (A1, B3), (A1, B4), (A1, B5), (A1, B6)),
    ((A2, B1), (A2, B2), (A2, B3), (A2, B4), (A2, B5)),
    ((A3, B1), (A3, B2), (A3, B3), (A4, B1), (A4, B2), (A5, B1)),
    ((A4, B3), (A5, B2)),
    ((A5, B3),),
    (),
)

# Block parent absorbing a cut-vertex child.
BLOCK_RULES = (
    ((B1, A1), (B1, A2), (B1, A3), (B1, A4), (B1, A5), (B2, A1),
     (B2, A2), (B3, A1), (B4, A1), (B4, A2), (B5, A1), (B6, A1)),
    ((B2, A3), (B2, A4), (B3, A2), (B5, A2)),
    ((B3, A3),),
    ((B2, A5), (B4, A3), (B4, A4), (B4, A5), (B6, A2)),
    ((B3, A4), (B5, A3), (B5, A4)),
    ((B3, A5), (B5, A5), (B6, A3), (B6, A4), (B6, A5)),
)

_INIT_CUT = (2, 1, INF, INF, 0, INF)
_INIT_BLOCK = {
    0: (INF, INF, 0, INF, INF, INF),
    1: (INF, 1, INF, INF, INF, 0),
    2: (INF, INF, INF, INF, INF, 0),
}

# f* value of a node given the initial slot its optimal labeling descends to.
_CUT_SLOT_VALUE = np.array([2, 1, 0, 0, 0, 0], dtype=np.int64)
_BLOCK_SLOT_VALUE = np.array([0, 1, 0, 0, 0, 0], dtype=np.int64)

_TABLE, _COUNTS = _minplus.pack_rules([CUT_RULES, BLOCK_RULES], 6)


def init_vector_block(kind: NodeKind, btype: int | None = None) -> tuple:
    if kind == NodeKind.CUT:
        if btype is not None:
            raise ValueError("cut-vertices have no block type")
        return _INIT_CUT
    if btype not in _INIT_BLOCK:
        raise ValueError(f"block type must be 0, 1 or 2, got {btype!r}")
    return _INIT_BLOCK[btype]


def merge_cut_parent(parent, child) -> tuple:
    return _minplus.merge(parent, child, CUT_RULES)


def merge_block_parent(parent, child) -> tuple:
    return _minplus.merge(parent, child, BLOCK_RULES)


# Initial-vector classes: 0 cut-vertex, 1 + t block of type t.
_INIT = np.array(
    [_minplus.to_kernel(_INIT_CUT)] + [_minplus.to_kernel(_INIT_BLOCK[t]) for t in range(3)]
)
_CLS_KIND = np.array([NodeKind.CUT, NodeKind.BLOCK, NodeKind.BLOCK, NodeKind.BLOCK], dtype=np.int64)


def _init_classes(t: BlockCutTree) -> np.ndarray:
    cls = np.zeros(t.node_count, dtype=np.int8)
    cls[t.n_cut:] = 1 + t.block_type
    return cls


def _fold(t: BlockCutTree, ordering, in_place=False):
    return _minplus.run(
        ordering, _init_classes(t), _CLS_KIND, _INIT, _TABLE, _COUNTS, in_place
    )


def root_vector(t: BlockCutTree, root: int | None = None, *, in_place: bool = False) -> tuple:
    """Final state vector at the root node of ``t``.

    ``in_place=True`` overwrites the parent slots one after another instead of
    reading a snapshot; it exists only to exhibit why that is incorrect.
    """
    ordering = t.ordering(root)
    vec, _ = _fold(t, ordering, in_place)
    return _minplus.from_kernel(vec[-1])


def lift_assignment(t: BlockCutTree, fstar) -> np.ndarray:
    """Labeling of the graph induced by a labeling of its block-cutpoint tree."""
    f_nodes = as_labels(fstar, t.node_count)
    if not is_induced_r2df_star(t, f_nodes):
        raise AssignmentError("labeling violates the block-cutpoint tree conditions")
    sizes = np.diff(t.block_ptr)
    owner = np.repeat(np.arange(t.n_blocks), sizes)
    f = np.empty(t.n_vertices, dtype=np.int64)
    f[t.block_verts] = f_nodes[t.n_cut + owner]
    f[t.cut_vertices] = f_nodes[: t.n_cut]
    return f


def solve_tree_labels(t: BlockCutTree, root: int | None = None) -> tuple[int, np.ndarray]:
    """Optimum and an optimal labeling of the nodes of ``t``."""
    ordering = t.ordering(root)
    vec, choice = _fold(t, ordering)
    value, slot = _minplus.best_root_slot(vec[-1])
    start = _minplus.certificate_slots(ordering, choice, slot)
    fstar = np.where(
        t.node_kind == NodeKind.CUT, _CUT_SLOT_VALUE[start], _BLOCK_SLOT_VALUE[start]
    )
    return value, fstar


def solve_r2d_block(g: Graph, root: int | None = None) -> tuple[int, np.ndarray]:
    """Return ``(gamma_R2(g), witness)`` for a connected block graph ``g``."""
    if g.n == 0:
        raise DisconnectedGraphError("empty graph")
    if g.n == 1:
        return 1, np.ones(1, dtype=np.int64)
    if is_complete(g):  # complete graphs are connected
        f = np.zeros(g.n, dtype=np.int64)
        f[0] = 2
        return 2, f
    t = block_cut_tree(g)
    value, fstar = solve_tree_labels(t, root)
    f = lift_assignment(t, fstar)
    if int(f.sum()) != value:
        raise AssertionError("lifted labeling weight differs from the DP optimum")
    return value, f

