"""Tree orderings and block-cutpoint trees.

Both DPs consume an elimination order in which every non-final node has
exactly one later neighbor (its father).  For block graphs the order is taken
over the block-cutpoint tree, whose nodes are numbered cut-vertices first
(ascending vertex id) followed by blocks.  Blocks are ordered by their
smallest member other than the one closest to vertex 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from typing import NamedTuple

import numpy as np
from numba import njit

from .errors import CompleteGraphError, DisconnectedGraphError, NotATreeError, NotBlockGraphError
from .graph import Graph, VertexSet, is_complete


class NodeKind(IntEnum):
    CUT = 0
    BLOCK = 1


class CutVertex(NamedTuple):
    vertex: int


class BlockNode(NamedTuple):
    block: int


@dataclass(frozen=True, eq=False)
class TreeOrdering:
    """Elimination order ``order[0..n-1]`` ending at the root.

    ``father_position[j]`` is the position of the father of ``order[j]``
    (``-1`` for the root).  ``father[v]`` is the unique later neighbor of
    ``v`` and ``position`` is the inverse permutation of ``order``.
    """

    order: np.ndarray
    father_position: np.ndarray = field(repr=False)

    @property
    def root(self) -> int:
        return int(self.order[-1])

    @cached_property
    def position(self) -> np.ndarray:
        pos = np.empty(len(self.order), dtype=np.int64)
        pos[self.order] = np.arange(len(self.order))
        return pos

    @cached_property
    def father(self) -> np.ndarray:
        fa = np.full(len(self.order), -1, dtype=np.int64)
        fa[self.order[:-1]] = self.order[self.father_position[:-1]]
        return fa

    def father_of(self, v: int) -> int | None:
        f = int(self.father[v])
        return None if f < 0 else f


@njit(cache=True)
def _reverse_bfs(indptr, indices, root, seen, queue, parent_slot, order, father_position):
    """Breadth-first search scanning neighbors in descending order, reversed.

    Siblings therefore come out in ascending order, deeper levels before
    shallower ones, and the root last.  Fills ``order`` and
    ``father_position`` and returns the number of vertices reached.
    """
    seen[:] = False
    queue[0] = root
    parent_slot[0] = -1
    seen[root] = True
    head, tail = 0, 1
    while head < tail:
        v = queue[head]
        for e in range(indptr[v + 1] - 1, indptr[v] - 1, -1):
            w = indices[e]
            if not seen[w]:
                seen[w] = True
                queue[tail] = w
                parent_slot[tail] = head
                tail += 1
        head += 1
    if tail == len(queue):
        for j in range(tail):
            i = tail - 1 - j
            order[j] = queue[i]
            father_position[j] = tail - 1 - parent_slot[i] if i > 0 else -1
    return tail


def _ordering(indptr, indices, root) -> TreeOrdering:
    n = len(indptr) - 1
    scratch = np.empty((4, n), dtype=np.int64)
    seen = np.empty(n, dtype=np.bool_)
    reached = _reverse_bfs(
        indptr, indices, np.int64(root), seen, scratch[0], scratch[1], scratch[2], scratch[3]
    )
    if reached != n:
        raise NotATreeError("graph is not connected")
    return TreeOrdering(scratch[2], scratch[3])


def tree_ordering(g: Graph, root: int = 0) -> TreeOrdering:
    if g.n == 0 or g.m != g.n - 1:
        raise NotATreeError(f"{g!r} is not a tree")
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} outside [0, {g.n})")
    # With m = n - 1, reaching every vertex from the root is equivalent to being a tree.
    try:
        return _ordering(g.indptr, g.indices, root)
    except NotATreeError:
        raise NotATreeError(f"{g!r} is not a tree") from None


def classify_block(h_size: int, i_size: int) -> int:
    """Block type from |H| and |I|: 0 if equal, 1 if one apart, else 2."""
    if h_size < 1 or i_size < 0 or i_size > h_size:
        raise ValueError(f"invalid block sizes |H|={h_size}, |I|={i_size}")
    return min(h_size - i_size, 2)


@njit(cache=True)
def _biconnected(indptr, indices):
    """Iterative Hopcroft-Tarjan on a connected graph.

    Returns cut-vertex flags and blocks as CSR (``bptr``, ``bverts``) in the
    order they are closed.
    """
    n = len(indptr) - 1
    disc = np.full(n, -1, dtype=np.int64)
    low = np.zeros(n, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    nxt = indptr[:-1].copy()
    is_cut = np.zeros(n, dtype=np.bool_)
    stack = np.empty(n, dtype=np.int64)
    vstack = np.empty(n, dtype=np.int64)
    bverts = np.empty(2 * n, dtype=np.int64)
    bptr = np.zeros(n + 1, dtype=np.int64)
    nb = 0
    nfill = 0
    sp = 0
    vsp = 0
    t = 0
    root_children = 0

    stack[sp] = 0
    sp += 1
    vstack[vsp] = 0
    vsp += 1
    disc[0] = 0
    low[0] = 0
    t = 1
    while sp > 0:
        v = stack[sp - 1]
        if nxt[v] < indptr[v + 1]:
            w = indices[nxt[v]]
            nxt[v] += 1
            if disc[w] < 0:
                parent[w] = v
                disc[w] = t
                low[w] = t
                t += 1
                stack[sp] = w
                sp += 1
                vstack[vsp] = w
                vsp += 1
            elif w != parent[v] and disc[w] < low[v]:
                low[v] = disc[w]
        else:
            sp -= 1
            p = parent[v]
            if p < 0:
                continue
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= disc[p]:
                if p == 0:
                    root_children += 1
                else:
                    is_cut[p] = True
                while True:
                    vsp -= 1
                    u = vstack[vsp]
                    bverts[nfill] = u
                    nfill += 1
                    if u == v:
                        break
                bverts[nfill] = p
                nfill += 1
                nb += 1
                bptr[nb] = nfill
    if root_children >= 2:
        is_cut[0] = True
    return is_cut, bptr[: nb + 1].copy(), bverts[:nfill].copy(), t


@dataclass(frozen=True, eq=False)
class BlockCutTree:
    """Block-cutpoint tree of a connected, non-complete block graph.

    Node ``i < n_cut`` is the cut-vertex ``cut_vertices[i]``; node
    ``n_cut + b`` is block ``b``.  ``indptr``/``indices`` give the tree's
    adjacency over node ids, sorted ascending.
    """

    n_vertices: int
    cut_vertices: np.ndarray
    block_ptr: np.ndarray = field(repr=False)
    block_verts: np.ndarray = field(repr=False)
    block_ncut: np.ndarray = field(repr=False)
    block_type: np.ndarray = field(repr=False)
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)

    @property
    def n_cut(self) -> int:
        return len(self.cut_vertices)

    @property
    def n_blocks(self) -> int:
        return len(self.block_ptr) - 1

    @property
    def node_count(self) -> int:
        return self.n_cut + self.n_blocks

    @property
    def root(self) -> int:
        return self.node_count - 1

    @cached_property
    def is_cut(self) -> np.ndarray:
        flags = np.zeros(self.n_vertices, dtype=bool)
        flags[self.cut_vertices] = True
        return flags

    @cached_property
    def cut_node(self) -> np.ndarray:
        """Map from graph vertex to its cut-vertex node id (``-1`` if none)."""
        ids = np.full(self.n_vertices, -1, dtype=np.int64)
        ids[self.cut_vertices] = np.arange(self.n_cut)
        return ids

    @cached_property
    def node_kind(self) -> np.ndarray:
        kind = np.full(self.node_count, NodeKind.BLOCK, dtype=np.int64)
        kind[: self.n_cut] = NodeKind.CUT
        return kind

    @cached_property
    def nodes(self) -> list[CutVertex | BlockNode]:
        return [CutVertex(int(v)) for v in self.cut_vertices] + [
            BlockNode(b) for b in range(self.n_blocks)
        ]

    def block_members(self, b: int) -> VertexSet:
        return tuple(self.block_verts[self.block_ptr[b]:self.block_ptr[b + 1]].tolist())

    def block_cutset(self, b: int) -> VertexSet:
        return tuple(v for v in self.block_members(b) if self.is_cut[v])

    def tree_edges(self) -> list[tuple[int, int]]:
        src = np.repeat(np.arange(self.node_count), np.diff(self.indptr))
        keep = src < self.indices
        return list(zip(src[keep].tolist(), self.indices[keep].tolist()))

    def ordering(self, root: int | None = None) -> TreeOrdering:
        root = self.root if root is None else root
        if not 0 <= root < self.node_count:
            raise ValueError(f"root {root} outside [0, {self.node_count})")
        return _ordering(self.indptr, self.indices, root)


@njit(cache=True)
def _tree_adjacency(bptr, bverts, cut_node, n_cut, indptr, indices, fill):
    """CSR adjacency of the block-cutpoint tree with sorted neighbor lists.

    Blocks are visited in id order and their (sorted) members in vertex
    order, so both sides of every list are filled in ascending order.
    ``indptr`` must arrive zeroed; returns the number of entries used.
    """
    n_blocks = len(bptr) - 1
    n_nodes = n_cut + n_blocks
    for b in range(n_blocks):
        for j in range(bptr[b], bptr[b + 1]):
            c = cut_node[bverts[j]]
            if c >= 0:
                indptr[c + 1] += 1
                indptr[n_cut + b + 1] += 1
    for i in range(n_nodes):
        indptr[i + 1] += indptr[i]
    for i in range(n_nodes):
        fill[i] = indptr[i]
    for b in range(n_blocks):
        for j in range(bptr[b], bptr[b + 1]):
            c = cut_node[bverts[j]]
            if c >= 0:
                indices[fill[n_cut + b]] = c
                fill[n_cut + b] += 1
                indices[fill[c]] = n_cut + b
                fill[c] += 1
    return indptr[n_nodes]


LAYOUT_OK, LAYOUT_DISCONNECTED, LAYOUT_NOT_BLOCK = 0, 1, 2


@njit(cache=True)
def _clique_layout(indptr, indices, pl, work, is_cut, bptr, bverts):
    """Blocks of a block graph read off a breadth-first search from vertex 0.

    In a block graph every block is one vertex (its member nearest the root)
    together with a set of that vertex's children that are pairwise
    adjacent.  Conversely, if every edge joins a parent and child or two
    siblings, and adjacent siblings always form cliques, the graph is a
    block graph with exactly those blocks.  Each sibling class is labelled
    by its smallest member, and blocks are numbered in increasing label
    order with their members sorted.

    ``pl[v]`` receives the BFS parent and sibling label of ``v``; keeping the
    two side by side costs one cache miss per random lookup.  ``work`` is a
    ``(4, n)`` scratch array; ``bptr`` and ``bverts`` need room for ``n`` and
    ``2n`` entries.  Returns ``(status, n_blocks)``.
    """
    n = len(indptr) - 1
    queue, sib_degree, size, rank = work
    pl[:, 0] = -2
    pl[0, 0] = -1
    queue[0] = 0
    head, tail = 0, 1
    while head < tail:
        v = queue[head]
        head += 1
        for e in range(indptr[v], indptr[v + 1]):
            w = indices[e]
            if pl[w, 0] == -2:
                pl[w, 0] = v
                queue[tail] = w
                tail += 1
    if tail != n:
        return LAYOUT_DISCONNECTED, 0

    size[:] = 0
    for v in range(n):
        pv = pl[v, 0]
        lab = v
        deg = 0
        for e in range(indptr[v], indptr[v + 1]):
            w = indices[e]
            pw = pl[w, 0]
            if pw == v or pv == w:
                continue
            if pv < 0 or pw != pv:
                return LAYOUT_NOT_BLOCK, 0
            deg += 1
            if w < lab:
                lab = w
        pl[v, 1] = lab
        sib_degree[v] = deg
        if v > 0:
            size[lab] += 1
    for v in range(1, n):
        if sib_degree[v] != size[pl[v, 1]] - 1:
            return LAYOUT_NOT_BLOCK, 0
        for e in range(indptr[v], indptr[v + 1]):
            w = indices[e]
            if pl[w, 0] == pl[v, 0] and pl[w, 1] != pl[v, 1]:
                return LAYOUT_NOT_BLOCK, 0

    # Block ids in increasing label order; a block holds its class plus the parent.
    # ``queue`` is reused to count the blocks hanging below each vertex.
    child_blocks = queue
    child_blocks[:] = 0
    n_blocks = 0
    bptr[0] = 0
    for v in range(1, n):
        if pl[v, 1] == v:
            rank[v] = n_blocks
            bptr[n_blocks + 1] = bptr[n_blocks] + size[v] + 1
            child_blocks[pl[v, 0]] += 1
            n_blocks += 1
    for b in range(n_blocks):
        # First free slot of block b, kept in sib_degree (no longer needed).
        sib_degree[b] = bptr[b]
    for v in range(1, n):
        b = rank[pl[v, 1]]
        bverts[sib_degree[b]] = v
        sib_degree[b] += 1
    for v in range(1, n):
        if pl[v, 1] == v:
            # Members so far are sorted; insert the parent into the free last slot.
            b = rank[v]
            top = pl[v, 0]
            k = bptr[b + 1] - 1
            while k > bptr[b] and bverts[k - 1] > top:
                bverts[k] = bverts[k - 1]
                k -= 1
            bverts[k] = top

    for v in range(n):
        is_cut[v] = child_blocks[v] + (1 if v > 0 else 0) >= 2
    return LAYOUT_OK, n_blocks


def _layout(g: Graph):
    n = g.n
    pl = np.empty((n, 2), dtype=np.int32)
    work = np.empty((4, n), dtype=np.int32)
    is_cut = np.empty(n, dtype=np.bool_)
    bptr = np.empty(n + 1, dtype=np.int64)
    bverts = np.empty(2 * n, dtype=np.int64)
    status, n_blocks = _clique_layout(g.indptr, g.indices, pl, work, is_cut, bptr, bverts)
    bptr = bptr[: n_blocks + 1]
    return status, is_cut, bptr, bverts[: bptr[-1]]


def _non_clique_witness(g: Graph):
    """A non-adjacent pair inside one biconnected component, if any."""
    _, bptr, bverts, _ = _biconnected(g.indptr, g.indices)
    for b in range(len(bptr) - 1):
        members = sorted(bverts[bptr[b]:bptr[b + 1]].tolist())
        for i, u in enumerate(members):
            nb = set(g.neighbors(u).tolist())
            for v in members[i + 1:]:
                if v not in nb:
                    return (u, v)
    return None


def is_block_graph(g: Graph) -> bool:
    """Connected graph whose every biconnected component is a clique."""
    if g.n <= 1:
        return g.n == 1
    return _layout(g)[0] == LAYOUT_OK


def block_cut_tree(g: Graph) -> BlockCutTree:
    if g.n == 0:
        raise DisconnectedGraphError("empty graph")
    status, is_cut, bptr, bverts = _layout(g)
    if status == LAYOUT_DISCONNECTED:
        raise DisconnectedGraphError(f"{g!r} is not connected")
    if is_complete(g):
        raise CompleteGraphError(f"{g!r} is complete; it has no block-cutpoint tree")
    if status == LAYOUT_NOT_BLOCK:
        u, v = _non_clique_witness(g)
        raise NotBlockGraphError(
            f"not a block graph: vertices {u} and {v} share a block but are not adjacent",
            witness=(u, v),
        )

    cut_vertices = np.flatnonzero(is_cut).astype(np.int64)
    n_cut = len(cut_vertices)
    cut_node = np.full(g.n, -1, dtype=np.int64)
    cut_node[cut_vertices] = np.arange(n_cut)

    n_nodes = n_cut + len(bptr) - 1
    indptr = np.zeros(n_nodes + 1, dtype=np.int64)
    indices = np.empty(2 * len(bverts), dtype=np.int64)
    fill = np.empty(n_nodes, dtype=np.int64)
    used = _tree_adjacency(bptr, bverts, cut_node, n_cut, indptr, indices, fill)
    indices = indices[:used]
    block_ncut = np.diff(indptr[n_cut:])
    block_type = np.minimum(np.diff(bptr) - block_ncut, 2)
    return BlockCutTree(g.n, cut_vertices, bptr, bverts, block_ncut, block_type, indptr, indices)
