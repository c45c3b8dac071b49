"""Undirected simple graphs in compressed adjacency (CSR) form.

Vertices are always numbered ``0..n-1``. Edge-list input with arbitrary
tokens is compacted to that range in order of first appearance, and the
original tokens are kept in :attr:`Graph.labels` so outputs can be written
back with the caller's identifiers.
"""

from __future__ import annotations

import io
import os
import warnings
from dataclasses import dataclass
from typing import IO, Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "EdgeListError",
    "Graph",
    "LoadedGraph",
    "load_edge_list",
    "parse_edge_list",
    "write_edge_list",
    "neighbors",
]

COMMENT_PREFIXES = ("#", "%")


class EdgeListError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line!r}")
        self.lineno = lineno
        self.line = line


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph.

    ``indptr``/``indices`` hold the sorted neighbor lists; ``edges`` is the
    canonical ``(m, 2)`` edge array with ``v < u`` in each row, sorted
    lexicographically. Every per-edge array elsewhere in the package is
    aligned with ``edges``.
    """

    indptr: np.ndarray
    indices: np.ndarray
    edges: np.ndarray
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]] | np.ndarray,
        labels: Sequence[str] | None = None,
    ) -> Graph:
        """Build a graph on ``n`` vertices, dropping self-loops and duplicates."""
        arr = np.asarray(edges, dtype=np.int64)
        if arr.size == 0:
            arr = np.empty((0, 2), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("edges must have shape (m, 2)")
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise ValueError(f"edge endpoint out of range 0..{n - 1}")
        if labels is not None and len(labels) != n:
            raise ValueError("labels must have one entry per vertex")

        arr = arr[arr[:, 0] != arr[:, 1]]
        canon = np.sort(arr, axis=1)
        canon = np.unique(canon, axis=0) if len(canon) else canon
        canon = np.ascontiguousarray(canon, dtype=np.int64)

        # both orientations, sorted by (source, target) -> CSR rows sorted
        src = np.concatenate([canon[:, 0], canon[:, 1]])
        dst = np.concatenate([canon[:, 1], canon[:, 0]])
        order = np.lexsort((dst, src))
        indices = dst[order]
        counts = np.bincount(src, minlength=n) if n else np.zeros(0, np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])

        for a in (indptr, indices, canon):
            a.setflags(write=False)
        return cls(indptr, indices, canon, tuple(labels) if labels is not None else None)

    @property
    def vertex_count(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of ``v`` (``v`` itself excluded)."""
        self._check_vertex(v)
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def has_edge(self, v: int, u: int) -> bool:
        if not (0 <= v < self.vertex_count and 0 <= u < self.vertex_count):
            return False
        nbrs = self.indices[self.indptr[v] : self.indptr[v + 1]]
        i = np.searchsorted(nbrs, u)
        return bool(i < len(nbrs) and nbrs[i] == u)

    def edge_index(self, v: int, u: int) -> int:
        """Position of edge ``{v, u}`` in :attr:`edges`."""
        if v > u:
            v, u = u, v
        if not self.has_edge(v, u):
            raise ValueError(f"({v}, {u}) is not an edge")
        # canonical edges are sorted lexicographically
        lo = np.searchsorted(self.edges[:, 0], v, side="left")
        hi = np.searchsorted(self.edges[:, 0], v, side="right")
        return int(lo + np.searchsorted(self.edges[lo:hi, 1], u))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def label_list(self) -> list[str]:
        if self.labels is not None:
            return list(self.labels)
        return [str(v) for v in range(self.vertex_count)]

    def connected_components(self) -> np.ndarray:
        """Component id per vertex (ids dense, ordered by smallest vertex)."""
        from scipy.sparse import csr_matrix
        from scipy.sparse.csgraph import connected_components

        n = self.vertex_count
        if n == 0:
            return np.zeros(0, dtype=np.int64)
        data = np.ones(len(self.indices), dtype=np.int8)
        adj = csr_matrix((data, self.indices, self.indptr), shape=(n, n))
        _, comp = connected_components(adj, directed=False)
        # scipy already labels in order of the lowest unvisited vertex
        return comp.astype(np.int64)

    def summary(self) -> dict:
        return {"vertices": self.vertex_count, "edges": self.edge_count}

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range 0..{self.vertex_count - 1}")

    def __repr__(self) -> str:
        return f"Graph(vertices={self.vertex_count}, edges={self.edge_count})"


def neighbors(g: Graph, v: int) -> np.ndarray:
    return g.neighbors(v)


class LoadedGraph(NamedTuple):
    graph: Graph
    self_loops_dropped: int
    duplicates_dropped: int

    def summary(self) -> dict:
        return {
            "vertices": self.graph.vertex_count,
            "edges": self.graph.edge_count,
            "self_loops_dropped": self.self_loops_dropped,
            "duplicates_dropped": self.duplicates_dropped,
        }


def parse_edge_list(lines: Iterable[str] | str) -> LoadedGraph:
    """Parse whitespace-separated edge-list text.

    Lines starting with ``#`` or ``%`` are comments. Each remaining line must
    hold two vertex tokens; a third column (e.g. a weight) is ignored with a
    warning. Ids are compacted in first-appearance order.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()

    ids: dict[str, int] = {}
    src: list[int] = []
    dst: list[int] = []
    self_loops = 0
    warned = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        toks = line.split()
        if len(toks) != 2:
            if len(toks) == 3:
                if not warned:
                    warnings.warn(
                        f"line {lineno}: extra column ignored; graph is treated as unweighted",
                        stacklevel=2,
                    )
                    warned = True
                toks = toks[:2]
            else:
                raise EdgeListError(lineno, raw.rstrip("\n"), f"expected 2 tokens, got {len(toks)}")
        a = ids.setdefault(toks[0], len(ids))
        b = ids.setdefault(toks[1], len(ids))
        if a == b:
            self_loops += 1
            continue
        src.append(a)
        dst.append(b)

    edges = np.column_stack([np.asarray(src, np.int64), np.asarray(dst, np.int64)])
    g = Graph.from_edges(len(ids), edges, labels=list(ids))
    return LoadedGraph(g, self_loops, len(src) - g.edge_count)


def load_edge_list(source: str | os.PathLike | IO) -> LoadedGraph:
    """Load an edge list from a path or an open (text or binary) stream."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            return parse_edge_list(fh)
    if isinstance(source, (io.RawIOBase, io.BufferedIOBase)) or "b" in getattr(source, "mode", ""):
        return parse_edge_list(io.TextIOWrapper(source, encoding="utf-8"))
    return parse_edge_list(source)


def _id_preserving_lines(g: Graph) -> list[tuple[int, int]]:
    # edges ordered by (max, min): each vertex then first shows up in order
    # of id, unless it has no lower neighbor; such vertices get a "v v"
    # declaration line ahead of time
    edges = g.edges[np.lexsort((g.edges[:, 0], g.edges[:, 1]))]
    out: list[tuple[int, int]] = []
    nxt = 0
    for v, u in edges.tolist():
        if u >= nxt:
            if not (v == nxt and u == v + 1):
                out.extend((x, x) for x in range(nxt, u))
            nxt = u + 1
        out.append((v, u))
    out.extend((x, x) for x in range(nxt, g.vertex_count))
    return out


def write_edge_list(g: Graph, dest: str | os.PathLike | IO) -> None:
    """Write ``g`` as ``v u`` lines that reload to the identical graph.

    Reloading compacts ids by first appearance, so lines are ordered to make
    first appearance follow id order. Vertices that would otherwise appear
    too late (including isolated ones) are declared with a ``v v`` line,
    which the loader counts as a dropped self-loop while keeping the vertex.
    """
    labels = g.label_list()
    text = "".join(f"{labels[v]} {labels[u]}\n" for v, u in _id_preserving_lines(g))
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        dest.write(text)
