"""Independent Roman {2}-domination number of a tree in linear time.

Rooted subtrees are summarised by five weights, one per class of labeling
``f`` of the subtree with root ``r``:

=====  ===============================================================
slot   class
=====  ===============================================================
A      ``f`` is an IR2DF and ``f(r) = 2``
B      ``f`` is an IR2DF and ``f(r) = 1``
C      ``f`` is an IR2DF and ``f(r) = 0``
D      ``f`` fails only at ``r`` (``f(r)=0``) and ``f(N[r]) = 1``
E      ``f`` fails only at ``r`` (``f(r)=0``) and ``f(N[r]) = 0``
=====  ===============================================================

Attaching a child subtree to the root is a min-plus merge of the two vectors.
"""

from __future__ import annotations

import numpy as np

from . import _minplus
from ._minplus import INF
from .decomposition import tree_ordering
from .graph import Graph

A, B, C, D, E = range(5)

# For each merged slot: (parent slot, child slot) combinations, in tie-break order.
TREE_RULES = (
    ((A, C), (A, D), (A, E)),
    ((B, C), (B, D)),
    ((C, A), (C, B), (C, C), (D, A), (D, B), (E, A)),
    ((D, C), (E, B)),
    ((E, C),),
)

# Label of a single vertex whose own contribution is the given initial slot.
SLOT_LABEL = np.array([2, 1, 0, 0, 0], dtype=np.int64)

_TABLE, _COUNTS = _minplus.pack_rules([TREE_RULES], 5)


def init_vector_tree() -> tuple:
    return (2, 1, INF, INF, 0)


def merge_tree(parent, child) -> tuple:
    """State vector of the tree obtained by joining ``child``'s root under
    ``parent``'s root."""
    return _minplus.merge(parent, child, TREE_RULES)


def merge_tree_choices(parent, child):
    """:func:`merge_tree` plus the minimising (parent, child) slot pair per slot."""
    return _minplus.merge_with_choices(parent, child, TREE_RULES)


def root_vector(g: Graph, root: int = 0) -> tuple:
    """Final state vector at ``root`` (infinite slots as ``math.inf``)."""
    ordering = tree_ordering(g, root)
    vec, _ = _fold(ordering)
    return _minplus.from_kernel(vec[-1])


_INIT = _minplus.to_kernel(init_vector_tree())[None, :]
_CLS_KIND = np.zeros(1, dtype=np.int64)


def _fold(ordering):
    return _minplus.run(ordering, None, _CLS_KIND, _INIT, _TABLE, _COUNTS)


def solve_ir2d_tree(g: Graph, root: int = 0) -> tuple[int, np.ndarray]:
    """Return ``(i_R2(g), witness)`` for a tree ``g``.

    The witness is a label array that is an independent Roman
    {2}-dominating function of weight equal to the returned number.
    """
    ordering = tree_ordering(g, root)
    if g.n == 1:
        return 1, np.ones(1, dtype=np.int64)
    vec, choice = _fold(ordering)
    value, slot = _minplus.best_root_slot(vec[-1])
    return value, SLOT_LABEL[_minplus.certificate_slots(ordering, choice, slot)]
