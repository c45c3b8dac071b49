"""Synthetic benchmark graphs with ground truth where it exists.

All random generators draw from :class:`XorShift64Star`, a fully specified
64-bit stream, so a (generator, parameters, seed) triple always yields the
same edge list. The recurrences (all arithmetic mod 2**64)::

    seeding (splitmix64):
        z = seed + 0x9E3779B97F4A7C15
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
        state = z ^ (z >> 31)          # replaced by 0x9E3779B97F4A7C15 if 0

    next():
        x ^= x >> 12; x ^= x << 25; x ^= x >> 27
        return x * 0x2545F4914F6CDD1D

    random()       = (next() >> 11) * 2**-53               # [0, 1)
    randbelow(k)   = next() % k, redrawing while next() >= 2**64 - 2**64 % k
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph
from .partition import Partition

__all__ = [
    "XorShift64Star",
    "LabeledGraph",
    "ring_of_cliques",
    "erdos_renyi",
    "barabasi_albert",
    "two_level_hierarchical",
]

_MASK = (1 << 64) - 1


class XorShift64Star:
    def __init__(self, seed: int = 0):
        z = (seed + 0x9E3779B97F4A7C15) & _MASK
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def randbelow(self, k: int) -> int:
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            r = self.next()
            if r < limit:
                return r % k


@dataclass
class LabeledGraph:
    graph: Graph
    truth: Partition | None = None
    meta: dict = field(default_factory=dict)
    # finest level first; truth is truth_levels[0] when present
    truth_levels: list[Partition] = field(default_factory=list)


def ring_of_cliques(n_cliques: int, clique_size: int) -> LabeledGraph:
    """``n_cliques`` cliques of ``clique_size`` joined in a ring by single edges.

    Clique ``i`` holds ids ``i*m .. (i+1)*m - 1``; its last vertex links to
    the first vertex of clique ``i+1`` (mod ``n_cliques``).
    """
    if n_cliques < 3 or clique_size < 3:
        raise ValueError("ring_of_cliques needs n_cliques >= 3 and clique_size >= 3")
    m = clique_size
    iu, ju = np.triu_indices(m, k=1)
    base = np.arange(n_cliques)[:, None] * m
    intra = np.column_stack([(base + iu).ravel(), (base + ju).ravel()])
    last = np.arange(n_cliques) * m + m - 1
    nxt = ((np.arange(n_cliques) + 1) % n_cliques) * m
    bridges = np.column_stack([last, nxt])
    g = Graph.from_edges(n_cliques * m, np.vstack([intra, bridges]))
    truth = Partition.from_labels(np.repeat(np.arange(n_cliques), m))
    meta = {"generator": "ring-cliques", "cliques": n_cliques, "size": m}
    return LabeledGraph(g, truth, meta, [truth])


def erdos_renyi(n: int, p: float, seed: int = 0) -> LabeledGraph:
    """G(n, p) by geometric skipping over the lower-triangle pair sequence.

    Pairs ``(w, v)``, ``w < v``, are visited in order ``v = 1..n-1``,
    ``w = 0..v-1``; the gap to the next present pair is
    ``floor(log(1 - random()) / log1p(-p))``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    meta = {"generator": "er", "n": n, "p": p, "seed": seed}
    if p == 0.0 or n < 2:
        return LabeledGraph(Graph.from_edges(n, []), None, meta)
    if p == 1.0:
        iu, ju = np.triu_indices(n, k=1)
        return LabeledGraph(Graph.from_edges(n, np.column_stack([iu, ju])), None, meta)

    rng = XorShift64Star(seed)
    lp = math.log1p(-p)
    pairs = n * (n - 1) // 2
    src: list[int] = []
    dst: list[int] = []
    v, w = 1, -1
    while v < n:
        gap = math.log(1.0 - rng.random()) / lp
        if gap >= pairs:  # skips past every remaining pair (tiny p)
            break
        w += 1 + int(gap)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            src.append(w)
            dst.append(v)
    g = Graph.from_edges(n, np.column_stack([np.asarray(src, np.int64), np.asarray(dst, np.int64)]))
    return LabeledGraph(g, None, meta)


def barabasi_albert(n: int, m: int, seed: int = 0) -> LabeledGraph:
    """Preferential attachment grown from a complete core on ``m`` vertices.

    Each arriving vertex picks ``m`` distinct targets, each draw uniform over
    the multiset of edge endpoints (i.e. proportional to degree). With
    ``m == 1`` the core has no edges, so the first arrival links to vertex 0.
    Edge count is ``m*(m-1)/2 + (n-m)*m``.
    """
    if not 1 <= m < n:
        raise ValueError(f"barabasi_albert needs 1 <= m < n, got m={m}, n={n}")
    rng = XorShift64Star(seed)
    edges: list[tuple[int, int]] = []
    endpoints: list[int] = []
    for a in range(m):
        for b in range(a + 1, m):
            edges.append((a, b))
            endpoints += (a, b)
    for t in range(m, n):
        if not endpoints:
            targets = list(range(m))
        else:
            chosen: set[int] = set()
            targets = []
            while len(targets) < m:
                x = endpoints[rng.randbelow(len(endpoints))]
                if x not in chosen:
                    chosen.add(x)
                    targets.append(x)
        for x in targets:
            edges.append((x, t))
            endpoints += (x, t)
    meta = {"generator": "ba", "n": n, "m": m, "seed": seed}
    return LabeledGraph(Graph.from_edges(n, edges), None, meta)


def two_level_hierarchical(groups: int, cliques_per_group: int, clique_size: int) -> LabeledGraph:
    """Cliques coupled in rings inside groups; groups coupled in a ring.

    Level-1 truth is the cliques, level-2 truth the groups. In natural
    numbering clique ``i`` of group ``g`` holds ``(g*P + i)*m + j`` for
    ``j < m``. Inside a group, vertex 1 of clique ``i`` links to vertex 0 of
    clique ``i+1`` (mod ``P``). Vertex 2 of clique 0 in group ``g`` links to
    vertex 2 of clique ``P-1`` in group ``g+1`` (mod ``groups``).

    The vertices carrying inter-group edges are then renumbered to the top
    of the id range. Every inter-clique edge has similarity 0, so merges
    across them are decided by canonical edge order; this numbering makes
    each clique's first such edge the link to its predecessor in the group
    ring, which is what lets a size-driven level recover the groups.
    """
    G, P, m = groups, cliques_per_group, clique_size
    if G < 2 or P < 2 or m < 3:
        raise ValueError("two_level_hierarchical needs groups >= 2, cliques_per_group >= 2, clique_size >= 3")
    n = G * P * m

    def nat(g: int, i: int, j: int) -> int:
        return (g * P + i) * m + j

    iu, ju = np.triu_indices(m, k=1)
    base = np.arange(G * P)[:, None] * m
    edges = [np.column_stack([(base + iu).ravel(), (base + ju).ravel()])]
    ring = [(nat(g, i, 1), nat(g, (i + 1) % P, 0)) for g in range(G) for i in range(P)]
    inter = [(nat(g, 0, 2), nat((g + 1) % G, P - 1, 2)) for g in range(G)]
    edges.append(np.asarray(ring + inter, dtype=np.int64))
    edges = np.vstack(edges)

    designated = np.zeros(n, dtype=bool)
    designated[np.asarray(inter).ravel()] = True
    order = np.concatenate([np.flatnonzero(~designated), np.flatnonzero(designated)])
    new_id = np.empty(n, dtype=np.int64)
    new_id[order] = np.arange(n)

    g = Graph.from_edges(n, new_id[edges])
    clique_of = np.empty(n, dtype=np.int64)
    clique_of[new_id] = np.arange(n) // m
    level1 = Partition.from_labels(clique_of)
    level2 = Partition.from_labels(clique_of // P)
    meta = {"generator": "hier2", "groups": G, "cliques": P, "size": m}
    return LabeledGraph(g, level1, meta, [level1, level2])
