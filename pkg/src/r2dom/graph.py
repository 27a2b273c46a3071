"""Immutable undirected simple graphs over dense vertex indices ``0..n-1``.

Adjacency is kept in CSR form (``indptr``/``indices``) with every neighbor
list sorted ascending, so iteration order is deterministic everywhere and the
arrays can be handed straight to compiled kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _cc

from .errors import GraphError

VertexSet = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """Per-vertex sorted neighbor lists as plain Python lists."""
        ind = self.indices.tolist()
        ptr = self.indptr.tolist()
        return [ind[ptr[v]:ptr[v + 1]] for v in range(self.n)]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        src = np.repeat(np.arange(self.n), self.degrees)
        keep = src < self.indices
        return list(zip(src[keep].tolist(), self.indices[keep].tolist()))

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def to_csr(self) -> csr_matrix:
        data = np.ones(len(self.indices), dtype=np.int8)
        return csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]] | np.ndarray) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Self-loops, out-of-range endpoints and repeated edges (in either
    orientation) raise :class:`GraphError`; duplicates are never collapsed.
    """
    n = int(n)
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    arr = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GraphError("edges must be a sequence of (u, v) pairs")
    u, v = arr[:, 0], arr[:, 1]
    bad = (u < 0) | (u >= n) | (v < 0) | (v >= n)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise GraphError(f"edge {i} ({u[i]}, {v[i]}) has an endpoint outside [0, {n})")
    loops = u == v
    if loops.any():
        i = int(np.flatnonzero(loops)[0])
        raise GraphError(f"edge {i} ({u[i]}, {v[i]}) is a self-loop")

    lo, hi = np.minimum(u, v), np.maximum(u, v)
    key = lo * n + hi
    order = np.argsort(key, kind="stable")
    dup = np.flatnonzero(key[order][1:] == key[order][:-1])
    if len(dup):
        i = int(order[dup[0] + 1])
        raise GraphError(f"edge {i} ({u[i]}, {v[i]}) is a duplicate")

    src = np.concatenate([u, v])
    dst = np.concatenate([v, u])
    perm = np.lexsort((dst, src))
    indices = dst[perm]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(n, indptr, indices)


def from_adjacency(adjacency: Sequence[Iterable[int]]) -> Graph:
    """Build a graph from symmetric neighbor lists (each edge listed twice)."""
    edges = [(u, v) for u, nbrs in enumerate(adjacency) for v in nbrs if u < v]
    g = build_graph(len(adjacency), edges)
    if 2 * g.m != sum(len(list(nb)) for nb in adjacency):
        raise GraphError("adjacency lists are not symmetric")
    return g


def vertex_set(vertices: Iterable[int], n: int) -> VertexSet:
    s = tuple(sorted(set(int(v) for v in vertices)))
    if s and (s[0] < 0 or s[-1] >= n):
        raise GraphError(f"vertex set has members outside [0, {n})")
    return s


def connected_components(g: Graph) -> list[VertexSet]:
    """Vertex sets of the connected components, ordered by smallest member."""
    if g.n == 0:
        return []
    _, labels = _cc(g.to_csr(), directed=False)
    order = np.argsort(labels, kind="stable")
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    comps = [tuple(c.tolist()) for c in np.split(order, bounds)]
    comps.sort(key=lambda c: c[0])
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    ncomp, _ = _cc(g.to_csr(), directed=False)
    return ncomp == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    members = vertex_set(s, g.n)
    for i, u in enumerate(members):
        nb = set(g.neighbors(u).tolist())
        if any(v not in nb for v in members[i + 1:]):
            return False
    return True


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
    vertices = np.asarray(vertices, dtype=np.int64)
    relabel = np.full(g.n, -1, dtype=np.int64)
    relabel[vertices] = np.arange(len(vertices))
    src = np.repeat(np.arange(g.n), g.degrees)
    keep = (src < g.indices) & (relabel[src] >= 0) & (relabel[g.indices] >= 0)
    edges = np.stack([relabel[src[keep]], relabel[g.indices[keep]]], axis=1)
    return build_graph(len(vertices), edges)


# Small named graphs used throughout tests and examples.

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])
