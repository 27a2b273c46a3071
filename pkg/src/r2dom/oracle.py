"""Exhaustive ground-truth solvers and seeded instance generators.

The brute-force searches enumerate label vectors in lexicographic order
(vertex 0 first, labels 0 < 1 < 2) and keep a candidate only if it is strictly
lighter than the best so far, so the reported witness is the
lexicographically smallest optimal labeling.  Two exact prunings keep n = 15
cheap: a branch stops once its partial weight reaches the incumbent, and a
0-labelled vertex is rejected as soon as its whole closed neighborhood is
labelled and its neighbor sum is still below 2.

Random instances come from :class:`Lcg64`, a 64-bit linear congruential
generator with Knuth's MMIX constants::

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64

Each draw advances the state once and uses its top 32 bits; ``below(k)``
returns ``(top32 * k) >> 32``.  The initial state is the seed itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from numba import njit

from .errors import OracleSizeError
from .graph import Graph, VertexSet, build_graph

MAX_R2_VERTICES = 15
MAX_VC_VERTICES = 20


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    witness: tuple
    explored: int


class Lcg64:
    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next32(self) -> int:
        self.state = (self.MULT * self.state + self.INC) & self.MASK
        return self.state >> 32

    def below(self, k: int) -> int:
        """Uniform-ish integer in ``[0, k)``."""
        return (self.next32() * k) >> 32


@njit(cache=True)
def _search(n, indptr, indices, closes_ptr, closes, independent):
    labels = np.zeros(n, dtype=np.int64)
    best_labels = np.zeros(n, dtype=np.int64)
    nbsum = np.zeros(n, dtype=np.int64)
    nxt = np.zeros(n + 1, dtype=np.int64)
    best = 2 * n + 1
    w = 0
    explored = 0
    k = 0
    while k >= 0:
        if k == n:
            best = w
            best_labels[:] = labels
            k -= 1
        else:
            lab = nxt[k]
            if lab <= 2 and w + lab < best:
                nxt[k] = lab + 1
                labels[k] = lab
                w += lab
                for e in range(indptr[k], indptr[k + 1]):
                    nbsum[indices[e]] += lab
                explored += 1
                ok = True
                if independent and lab > 0:
                    for e in range(indptr[k], indptr[k + 1]):
                        if indices[e] < k and labels[indices[e]] > 0:
                            ok = False
                if ok:
                    for e in range(closes_ptr[k], closes_ptr[k + 1]):
                        u = closes[e]
                        if labels[u] == 0 and nbsum[u] < 2:
                            ok = False
                if ok:
                    k += 1
                    nxt[k] = 0
                    continue
            else:
                k -= 1
        # Undo the label at depth k before trying its next value.
        if k >= 0:
            lab = labels[k]
            w -= lab
            for e in range(indptr[k], indptr[k + 1]):
                nbsum[indices[e]] -= lab
            labels[k] = 0
    return best, best_labels, explored


def _brute(g: Graph, independent: bool) -> OracleResult:
    if g.n > MAX_R2_VERTICES:
        raise OracleSizeError(f"brute force limited to {MAX_R2_VERTICES} vertices, got {g.n}")
    if g.n == 0:
        return OracleResult(0, (), 1)
    # A vertex can be checked once the largest index in its closed neighborhood is labelled.
    closer = np.arange(g.n)
    src = np.repeat(np.arange(g.n), g.degrees)
    np.maximum.at(closer, src, g.indices)
    order = np.argsort(closer, kind="stable")
    closes_ptr = np.zeros(g.n + 1, dtype=np.int64)
    np.cumsum(np.bincount(closer, minlength=g.n), out=closes_ptr[1:])
    best, labels, explored = _search(
        g.n, g.indptr, g.indices, closes_ptr, order.astype(np.int64), independent
    )
    return OracleResult(int(best), tuple(labels.tolist()), int(explored))


def brute_gamma_r2(g: Graph) -> OracleResult:
    """Minimum weight Roman {2}-dominating function by exhaustive search."""
    return _brute(g, False)


def brute_i_r2(g: Graph) -> OracleResult:
    """Minimum weight independent Roman {2}-dominating function."""
    return _brute(g, True)


def brute_min_vertex_cover(g: Graph) -> OracleResult:
    """Smallest vertex cover; subsets tried by size, then lexicographically."""
    if g.n > MAX_VC_VERTICES:
        raise OracleSizeError(f"vertex cover oracle limited to {MAX_VC_VERTICES} vertices, got {g.n}")
    edges = g.edges()
    explored = 0
    for k in range(g.n + 1):
        for cand in itertools.combinations(range(g.n), k):
            explored += 1
            chosen = set(cand)
            if all(u in chosen or v in chosen for u, v in edges):
                return OracleResult(k, cand, explored)
    raise AssertionError("unreachable: the full vertex set is a cover")


# Generators

def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Labelled tree on ``n`` vertices encoded by a sequence of length ``n-2``."""
    if n <= 0:
        raise ValueError("n must be positive")
    if n == 1:
        return build_graph(1, [])
    if len(seq) != n - 2:
        raise ValueError(f"sequence must have length {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return build_graph(n, edges)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labelled tree on ``n`` vertices, one per Prüfer sequence."""
    if n <= 2:
        yield prufer_decode([], n)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree via a random Prüfer sequence."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = Lcg64(seed)
    return prufer_decode([rng.below(n) for _ in range(max(n - 2, 0))], n)


def gen_random_block_graph(n: int, max_block: int, seed: int) -> Graph:
    """Connected block graph grown by gluing cliques onto random vertices.

    Each step picks an existing vertex and a clique size in
    ``[2, max_block]`` (truncated to the remaining budget) and attaches a new
    clique sharing only that vertex.
    """
    if n < 1 or max_block < 2:
        raise ValueError("need n >= 1 and max_block >= 2")
    rng = Lcg64(seed)
    edges = []
    count = 1
    while count < n:
        anchor = rng.below(count)
        size = min(2 + rng.below(max_block - 1), n - count + 1)
        clique = [anchor, *range(count, count + size - 1)]
        count += size - 1
        edges.extend(itertools.combinations(clique, 2))
    return build_graph(n, edges)


def caterpillar(legs: Sequence[int]) -> Graph:
    """Path of ``len(legs)`` spine vertices, spine vertex ``i`` carrying ``legs[i]`` leaves."""
    s = len(legs)
    edges = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for i, k in enumerate(legs):
        for _ in range(k):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(nxt, edges)


def dominating_labeling(g: Graph, dominating: VertexSet) -> np.ndarray:
    f = np.zeros(g.n, dtype=np.int64)
    f[list(dominating)] = 2
    return f
