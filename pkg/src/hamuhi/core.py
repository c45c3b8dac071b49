"""Agglomerative merge heuristics.

Detection runs in three steps. Edge similarities are computed once. Then,
starting from singletons, every community that fails the requested
community definition is merged into its most similar adjacent community,
repeating until a full pass merges nothing. Finally the same loop runs
with a minimum-size test in place of the definition test.

Each pass has the same shape:

1. one scan over the canonical edge array, accumulating per-community
   balances and the best adjacent partner ``R[c]`` (highest similarity,
   strict ``>``, so the first edge in canonical order wins ties);
2. one sweep over community ids ``0..n-1`` in increasing order, merging
   ``c`` into ``R[c]`` when ``c`` fails the test. Merges within a sweep see
   each other through the shared union-find, so chains collapse in one pass.

Similarities are read from the per-edge table and are never recomputed
after merges.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .disjoint_set import DisjointSet
from .graph import Graph
from .partition import Partition
from .similarity import EdgeSimilarityTable, Variant, compute_all

__all__ = [
    "Definition",
    "LevelTrace",
    "HamuhiResult",
    "HierarchyLevel",
    "community_detection",
    "hierarchical_level",
    "run_community_detection",
    "run_hierarchical_level",
    "partition_from_state",
    "hamuhi",
    "hamuhi_run",
    "hierarchy",
    "run_hierarchy",
    "check_definition",
    "definition_violations",
]


class Definition(str, enum.Enum):
    """Community test applied during detection.

    ``WEAK``: sum of internal degrees >= sum of external degrees.
    ``WEAKEST``: sum of internal degrees >= the largest number of edges
    toward any single other community.
    """

    WEAK = "weak"
    WEAKEST = "weakest"


@dataclass
class LevelTrace:
    iterations: int = 0
    merges: int = 0
    set_counts: list[int] = field(default_factory=list)


def _check_aligned(g: Graph, sims: EdgeSimilarityTable) -> np.ndarray:
    values = np.asarray(sims.values if isinstance(sims, EdgeSimilarityTable) else sims, dtype=np.float64)
    if values.shape != (g.edge_count,):
        raise ValueError(
            f"similarity table has {values.shape[0] if values.ndim else 0} entries, "
            f"graph has {g.edge_count} edges"
        )
    return values


def _best_partner(n: int, cu, cv, sims) -> tuple[np.ndarray, np.ndarray]:
    """Most similar adjacent community per community over external edges.

    ``cu``/``cv``/``sims`` describe the external edges in canonical
    order. Equivalent to the sequential scan with ``if sim > W[c]`` updates:
    the maximum similarity wins and among equal maxima the earliest edge.
    Linear time: a grouped max, then a grouped min of edge positions.
    """
    W = np.full(n, -1.0)
    R = np.full(n, -1, dtype=np.int64)
    m = len(cu)
    if m == 0:
        return W, R
    comm = np.concatenate([cu, cv])
    s = np.concatenate([sims, sims])
    np.maximum.at(W, comm, s)
    hit = s == W[comm]
    pos = np.tile(np.arange(m, dtype=np.int64), 2)
    first = np.full(n, m, dtype=np.int64)
    np.minimum.at(first, comm[hit], pos[hit])
    has = first < m
    c = np.flatnonzero(has)
    e = first[has]
    # a community sees each of its external edges exactly once
    R[c] = np.where(cu[e] == c, cv[e], cu[e])
    return W, R


def _merge_pass(state: DisjointSet, failing: np.ndarray, R: np.ndarray) -> int:
    c = np.flatnonzero(failing & (R != -1))
    return state.union_pairs(c, R[c])


def _edge_communities(g: Graph, state: DisjointSet):
    lab = state.roots()
    cu = lab[g.edges[:, 0]]
    cv = lab[g.edges[:, 1]]
    ext = cu != cv
    return cu, cv, ext


def run_community_detection(
    g: Graph,
    sims: EdgeSimilarityTable,
    definition: Definition | str,
    state: DisjointSet | None = None,
) -> tuple[DisjointSet, LevelTrace]:
    """Merge until every community satisfies ``definition``.

    Returns the (new or mutated) state and a trace of the passes.
    """
    definition = Definition(definition)
    values = _check_aligned(g, sims)
    n = g.vertex_count
    if state is None:
        state = DisjointSet(n)
    trace = LevelTrace()

    while True:
        trace.iterations += 1
        cu, cv, ext = _edge_communities(g, state)
        xu, xv = cu[ext], cv[ext]
        internal = np.bincount(cu[~ext], minlength=n) * 2
        W, R = _best_partner(n, xu, xv, values[ext])

        if definition is Definition.WEAK:
            balance = internal - np.bincount(xu, minlength=n) - np.bincount(xv, minlength=n)
            failing = balance < 0
        else:
            # per-pass pair counts; stale counts from earlier passes would
            # double count after merges
            D = np.zeros(n, dtype=np.int64)
            if len(xu):
                lo = np.minimum(xu, xv)
                hi = np.maximum(xu, xv)
                keys, counts = np.unique(lo * n + hi, return_counts=True)
                np.maximum.at(D, keys // n, counts)
                np.maximum.at(D, keys % n, counts)
            failing = internal < D

        merged = _merge_pass(state, failing, R)
        trace.merges += merged
        trace.set_counts.append(state.set_count)
        if merged == 0:
            return state, trace


def community_detection(
    g: Graph, sims: EdgeSimilarityTable, definition: Definition | str = Definition.WEAKEST
) -> DisjointSet:
    state, _ = run_community_detection(g, sims, definition)
    return state


def run_hierarchical_level(
    g: Graph, sims: EdgeSimilarityTable, state: DisjointSet, k: int
) -> tuple[DisjointSet, LevelTrace]:
    """Merge every community smaller than ``k`` into its most similar neighbor.

    Mutates ``state`` in place. Communities with no adjacent community are
    left alone whatever their size.
    """
    if k < 1:
        raise ValueError(f"minimum community size must be >= 1, got {k}")
    values = _check_aligned(g, sims)
    if len(state) != g.vertex_count:
        raise ValueError("community state does not match the graph")
    n = g.vertex_count
    trace = LevelTrace()

    while True:
        trace.iterations += 1
        cu, cv, ext = _edge_communities(g, state)
        _, R = _best_partner(n, cu[ext], cv[ext], values[ext])
        failing = state.size < k  # only meaningful at representatives; R is -1 elsewhere
        merged = _merge_pass(state, failing, R)
        trace.merges += merged
        trace.set_counts.append(state.set_count)
        if merged == 0:
            return state, trace


def hierarchical_level(g: Graph, sims: EdgeSimilarityTable, state: DisjointSet, k: int) -> DisjointSet:
    run_hierarchical_level(g, sims, state, k)
    return state


def partition_from_state(state: DisjointSet) -> Partition:
    return Partition.from_labels(state.roots())


@dataclass
class HamuhiResult:
    partition: Partition
    state: DisjointSet
    similarity: EdgeSimilarityTable
    detection: LevelTrace
    level: LevelTrace


def hamuhi_run(
    g: Graph,
    k: int = 2,
    definition: Definition | str = Definition.WEAKEST,
    similarity: Variant | str = Variant.MODIFIED,
    sims: EdgeSimilarityTable | None = None,
) -> HamuhiResult:
    """Full pipeline with traces; see :func:`hamuhi`."""
    if k < 1:
        raise ValueError(f"minimum community size must be >= 1, got {k}")
    if sims is None:
        sims = compute_all(g, similarity)
    state, det = run_community_detection(g, sims, definition)
    state, lvl = run_hierarchical_level(g, sims, state, k)
    return HamuhiResult(partition_from_state(state), state, sims, det, lvl)


def hamuhi(
    g: Graph,
    k: int = 2,
    definition: Definition | str = Definition.WEAKEST,
    similarity: Variant | str = Variant.MODIFIED,
) -> Partition:
    """Detect communities of size at least ``k`` meeting ``definition``.

    Deterministic for a given graph: ties are resolved by canonical edge
    order and community ids by union-by-size with smaller-id preference.
    """
    return hamuhi_run(g, k, definition, similarity).partition


@dataclass
class HierarchyLevel:
    k: int
    partition: Partition
    detection: LevelTrace | None
    level: LevelTrace


def hierarchy(
    g: Graph,
    definition: Definition | str = Definition.WEAKEST,
    levels: int = 2,
    k: int = 2,
    similarity: Variant | str = Variant.MODIFIED,
) -> list[HierarchyLevel]:
    """Successive levels, each with ``k = smallest community size + 1``.

    Stops early once a level leaves one community per connected component
    or a new level would not change anything.
    """
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    run = hamuhi_run(g, k, definition, similarity)
    out = [HierarchyLevel(k, run.partition, run.detection, run.level)]
    state = run.state
    n_components = len(np.unique(g.connected_components())) if g.vertex_count else 0

    while len(out) < levels:
        current = out[-1].partition
        if current.community_count <= n_components:
            break
        next_k = int(current.sizes.min()) + 1
        candidate = state.copy()
        candidate, trace = run_hierarchical_level(g, run.similarity, candidate, next_k)
        if trace.merges == 0:
            break
        state = candidate
        out.append(HierarchyLevel(next_k, partition_from_state(state), None, trace))
    return out


def run_hierarchy(
    g: Graph,
    definition: Definition | str = Definition.WEAKEST,
    levels: int = 2,
    k: int = 2,
    similarity: Variant | str = Variant.MODIFIED,
) -> list[Partition]:
    return [lv.partition for lv in hierarchy(g, definition, levels, k, similarity)]


def _degree_split(g: Graph, p: Partition, c: int) -> tuple[int, dict[int, int]]:
    internal = 0
    external: dict[int, int] = {}
    assignment = p.assignment
    for v in p.members(c).tolist():
        for u in g.neighbors(v).tolist():
            lu = int(assignment[u])
            if lu == c:
                internal += 1
            else:
                external[lu] = external.get(lu, 0) + 1
    return internal, external


def check_definition(g: Graph, p: Partition, c: int, definition: Definition | str) -> bool:
    """Recount from the graph whether community ``c`` meets ``definition``."""
    definition = Definition(definition)
    if p.vertex_count != g.vertex_count:
        raise ValueError("partition does not cover the graph's vertices")
    internal, external = _degree_split(g, p, c)
    if definition is Definition.WEAK:
        return internal >= sum(external.values())
    return internal >= max(external.values(), default=0)


def definition_violations(g: Graph, p: Partition, definition: Definition | str) -> list[int]:
    return [c for c in range(p.community_count) if not check_definition(g, p, c, definition)]
