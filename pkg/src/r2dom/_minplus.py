"""Min-plus state-vector merging shared by the tree and block-graph DPs.

A merge is described by a rule table: for every slot ``s`` of the merged
vector, an ordered tuple of ``(parent_slot, child_slot)`` pairs whose sums
are minimised.  The same tables drive the pure-Python ``merge`` (used by the
public per-merge functions) and the compiled ``fold``/``replay`` kernels
(used by the solvers), so the recurrences live in exactly one place.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from numba import njit

INF = math.inf

# Integer sentinel used inside compiled kernels. Real weights never exceed 2n.
KERNEL_INF = np.int64(1 << 40)

# Large work arrays are allocated with numpy rather than inside the kernels:
# numpy requests transparent huge pages for big buffers, which avoids most of
# the page faults that otherwise make the 10^6-vertex case disproportionately
# slow.

Rules = tuple[tuple[tuple[int, int], ...], ...]


def merge(parent: Sequence[float], child: Sequence[float], rules: Rules) -> tuple:
    """Merged vector computed from the pre-merge ``parent`` and ``child``."""
    return tuple(
        min((parent[p] + child[c] for p, c in terms), default=INF) for terms in rules
    )


def merge_with_choices(parent, child, rules: Rules):
    """Like :func:`merge`, also returning the first minimising pair per slot
    (``None`` where the slot stays infinite)."""
    out, picks = [], []
    for terms in rules:
        best, pick = INF, None
        for p, c in terms:
            v = parent[p] + child[c]
            if v < best:
                best, pick = v, (p, c)
        out.append(best)
        picks.append(pick)
    return tuple(out), tuple(picks)


def merge_in_place(parent, child, rules: Rules) -> tuple:
    """Slot-by-slot overwrite of ``parent``: later slots read already-updated
    earlier slots. Only valid when no rule reads a slot overwritten before it."""
    vec = list(parent)
    for s, terms in enumerate(rules):
        vec[s] = min((vec[p] + child[c] for p, c in terms), default=INF)
    return tuple(vec)


def pack_rules(rule_sets: Sequence[Rules], width: int):
    """Dense ``(kinds, width, max_terms, 2)`` table plus term counts for kernels."""
    tmax = max(len(t) for rules in rule_sets for t in rules)
    table = np.full((len(rule_sets), width, max(tmax, 1), 2), -1, dtype=np.int64)
    counts = np.zeros((len(rule_sets), width), dtype=np.int64)
    for k, rules in enumerate(rule_sets):
        for s, terms in enumerate(rules):
            counts[k, s] = len(terms)
            for t, (p, c) in enumerate(terms):
                table[k, s, t] = (p, c)
    return table, counts


def to_kernel(vec) -> np.ndarray:
    return np.array([KERNEL_INF if math.isinf(x) else int(x) for x in vec], dtype=np.int64)


def from_kernel(arr) -> tuple:
    return tuple(INF if x >= KERNEL_INF else int(x) for x in arr)


@njit(cache=True)
def fold(vec, choice, father_pos, cls, cls_kind, init, table, counts, in_place):
    """Merge every node into its father, in node order.

    Nodes are numbered by elimination position: node ``j`` merges into
    ``father_pos[j] > j`` and the last node is the root.  Node ``j`` starts
    from ``init[cls[j]]`` and, as a parent, uses the rule set
    ``cls_kind[cls[j]]``.  Fills ``vec`` with the final vectors and
    ``choice[c]`` with the minimising ``(parent_slot, child_slot)`` for each
    slot of the father's merged vector.
    """
    n_nodes = len(father_pos)
    width = init.shape[1]
    inf = KERNEL_INF
    for j in range(n_nodes):
        for s in range(width):
            vec[j, s] = init[cls[j], s]
    snap = np.empty(width, dtype=np.int64)
    for c in range(n_nodes - 1):
        k = father_pos[c]
        r = cls_kind[cls[k]]
        for s in range(width):
            snap[s] = vec[k, s]
        for s in range(width):
            best = inf
            bp = -1
            bc = -1
            for t in range(counts[r, s]):
                ps = table[r, s, t, 0]
                cs = table[r, s, t, 1]
                pv = vec[k, ps] if in_place else snap[ps]
                v = pv + vec[c, cs]
                if v < best:
                    best = v
                    bp = ps
                    bc = cs
            vec[k, s] = best
            choice[c, s, 0] = bp
            choice[c, s, 1] = bc


@njit(cache=True)
def replay(cur, father_pos, choice, root_slot):
    """Walk the recorded choices top-down, leaving each node's initial slot in ``cur``."""
    n_nodes = len(father_pos)
    cur[n_nodes - 1] = root_slot
    for c in range(n_nodes - 2, -1, -1):
        k = father_pos[c]
        cur[c] = choice[c, cur[k], 1]
        cur[k] = choice[c, cur[k], 0]


def run(ordering, cls, cls_kind, init, table, counts, in_place=False):
    """Fold over a :class:`TreeOrdering`.

    ``cls`` gives each node id its initial-vector class (a row of ``init``)
    or is ``None`` when every node is of class 0; results come back in
    elimination order.
    """
    n = len(ordering.order)
    cls = np.zeros(n, dtype=np.int8) if cls is None else cls[ordering.order]
    vec = np.empty((n, init.shape[1]), dtype=np.int64)
    choice = np.empty((n, init.shape[1], 2), dtype=np.int8)
    fold(vec, choice, ordering.father_position, cls, cls_kind, init, table, counts, in_place)
    return vec, choice


def certificate_slots(ordering, choice, root_slot) -> np.ndarray:
    """Initial slot of every node (indexed by node id) on an optimal path."""
    start = np.empty(len(ordering.order), dtype=np.int64)
    replay(start, ordering.father_position, choice, np.int64(root_slot))
    out = np.empty_like(start)
    out[ordering.order] = start
    return out


def best_root_slot(root_vec, slots=(0, 1, 2)) -> tuple[int, int]:
    """``(value, slot)`` of the first minimum over the accepting slots."""
    best, pick = None, None
    for s in slots:
        v = int(root_vec[s])
        if best is None or v < best:
            best, pick = v, s
    return best, pick
