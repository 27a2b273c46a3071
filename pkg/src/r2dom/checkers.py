"""Validity predicates for labelings, vertex covers and induced functions.

Assignments are sequences (list, tuple or array) indexed by vertex, or dicts
keyed by every vertex; labels must be in {0, 1, 2}.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

import numpy as np
from numba import njit

from .decomposition import BlockCutTree
from .errors import AssignmentError
from .graph import Graph

Assignment = Sequence[int] | np.ndarray | Mapping[int, int]


def as_labels(a: Assignment, n: int) -> np.ndarray:
    """Validated label array of length ``n``."""
    if isinstance(a, Mapping):
        if set(a) != set(range(n)):
            raise AssignmentError(f"assignment domain is not exactly [0, {n})")
        arr = np.array([a[v] for v in range(n)], dtype=np.int64)
    else:
        arr = np.asarray(a, dtype=np.int64)
    if arr.shape != (n,):
        raise AssignmentError(f"assignment has {arr.size} labels, expected {n}")
    if arr.size and (arr.min() < 0 or arr.max() > 2):
        raise AssignmentError("labels must be 0, 1 or 2")
    return arr


def weight(a: Assignment) -> int:
    if isinstance(a, Mapping):
        return int(sum(a.values()))
    return int(np.sum(np.asarray(a, dtype=np.int64)))


_LOW = np.int64((1 << 32) - 1)


@njit(cache=True)
def _neighbor_sums_into(out, indptr, indices, labels):
    for v in range(len(indptr) - 1):
        acc = 0
        for e in range(indptr[v], indptr[v + 1]):
            acc += labels[indices[e]]
        out[v] = acc


def _neighbor_sums(indptr, indices, labels) -> np.ndarray:
    out = np.empty(len(indptr) - 1, dtype=np.int64)
    _neighbor_sums_into(out, indptr, indices, labels)
    return out


def is_r2df(g: Graph, a: Assignment) -> bool:
    """Every 0-labelled vertex has neighbor label sum at least 2."""
    f = as_labels(a, g.n)
    sums = _neighbor_sums(g.indptr, g.indices, f)
    return bool(np.all((f > 0) | (sums >= 2)))


def is_ir2df(g: Graph, a: Assignment) -> bool:
    """An R2DF whose positive vertices are pairwise non-adjacent."""
    if not is_r2df(g, a):
        return False
    f = as_labels(a, g.n)
    src = np.repeat(np.arange(g.n), g.degrees)
    return not bool(np.any((f[src] > 0) & (f[g.indices] > 0)))


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    chosen = np.zeros(g.n, dtype=bool)
    members = list(s)
    if members:
        idx = np.asarray(members, dtype=np.int64)
        if idx.min() < 0 or idx.max() >= g.n:
            raise AssignmentError(f"cover has members outside [0, {g.n})")
        chosen[idx] = True
    src = np.repeat(np.arange(g.n), g.degrees)
    return bool(np.all(chosen[src] | chosen[g.indices]))


def is_induced_r2df_star(t: BlockCutTree, fstar: Assignment) -> bool:
    """Structural conditions on a labeling of the block-cutpoint tree.

    1. type-1 blocks carry 0 or 1;
    2. type-0 and type-2 blocks carry 0;
    3. a 0-valued cut-vertex sees a 2, or two 1s, in its closed
       distance-2 neighborhood;
    4. a 0-valued type-1/2 block sees a 2, or two 1s, among its tree
       neighbors.

    Optimality is deliberately not part of this predicate.
    """
    f = as_labels(fstar, t.node_count)
    nc = t.n_cut
    fb = f[nc:]
    btype = t.block_type
    if np.any(fb[btype == 1] > 1) or np.any(fb[btype != 1] != 0):
        return False

    # Counts of 1s and 2s travel together: 1s in the low 32 bits, 2s above.
    packed = (f == 1).astype(np.int64) + ((f == 2).astype(np.int64) << 32)
    packed_open = _neighbor_sums(t.indptr, t.indices, packed)
    ones_open, twos_open = packed_open & _LOW, packed_open >> 32

    need = (fb == 0) & (btype >= 1)
    ok_blocks = (twos_open[nc:] >= 1) | (ones_open[nc:] >= 2)
    if np.any(need & ~ok_blocks):
        return False

    # Closed neighborhoods of the blocks around a cut-vertex meet only in the
    # cut-vertex itself, which is 0 whenever condition 3 applies.
    block_closed = np.zeros(t.node_count, dtype=np.int64)
    block_closed[nc:] = packed[nc:] + packed_open[nc:]
    around = _neighbor_sums(t.indptr, t.indices, block_closed)[:nc]
    ones2, twos2 = around & _LOW, around >> 32
    fc = f[:nc]
    return not bool(np.any((fc == 0) & (twos2 < 1) & (ones2 < 2)))
