"""Union-find over vertex ids with size tracking.

Representatives double as community ids, so they always lie in ``0..n-1``
and per-community scratch arrays of length ``n`` can be indexed by them.
"""

from __future__ import annotations

import numpy as np

__all__ = ["DisjointSet", "CommunityState", "make_singletons"]


class DisjointSet:
    """Union by size with path compression.

    On equal sizes the smaller id becomes the representative, which keeps
    community ids reproducible from run to run.
    """

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.parent = np.arange(n, dtype=np.int64)
        self.size = np.ones(n, dtype=np.int64)
        self.set_count = n

    def __len__(self) -> int:
        return len(self.parent)

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self.parent):
            raise IndexError(f"element {v} out of range 0..{len(self.parent) - 1}")

    def find(self, v: int) -> int:
        self._check(v)
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return int(root)

    def union(self, a: int, b: int) -> int:
        """Merge the sets of ``a`` and ``b``; return the new representative."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        sa, sb = self.size[ra], self.size[rb]
        if sa < sb or (sa == sb and rb < ra):
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] = sa + sb
        self.set_count -= 1
        return ra

    def union_pairs(self, a, b) -> int:
        """Apply ``union(a[i], b[i])`` for each ``i`` in order; return the merge count.

        Same result as the scalar loop, including representatives, but runs
        on plain lists to avoid per-element numpy overhead.
        """
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape != b.shape:
            raise ValueError("pair arrays must have the same length")
        n = len(self.parent)
        if len(a) and (min(a.min(), b.min()) < 0 or max(a.max(), b.max()) >= n):
            raise IndexError(f"element out of range 0..{n - 1}")
        parent = self.parent.tolist()
        size = self.size.tolist()
        merges = 0
        for x, y in zip(a.tolist(), b.tolist()):
            rx = x
            while parent[rx] != rx:
                rx = parent[rx]
            while parent[x] != rx:
                parent[x], x = rx, parent[x]
            ry = y
            while parent[ry] != ry:
                ry = parent[ry]
            while parent[y] != ry:
                parent[y], y = ry, parent[y]
            if rx == ry:
                continue
            if size[rx] < size[ry] or (size[rx] == size[ry] and ry < rx):
                rx, ry = ry, rx
            parent[ry] = rx
            size[rx] += size[ry]
            merges += 1
        self.parent = np.asarray(parent, dtype=np.int64)
        self.size = np.asarray(size, dtype=np.int64)
        self.set_count -= merges
        return merges

    def size_of(self, v: int) -> int:
        return int(self.size[self.find(v)])

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def roots(self) -> np.ndarray:
        """Representative of every element, fully compressing the forest."""
        p = self.parent
        while True:
            gp = p[p]
            if np.array_equal(gp, p):
                break
            p = gp
        self.parent = p.copy()
        return p

    def copy(self) -> DisjointSet:
        other = DisjointSet.__new__(DisjointSet)
        other.parent = self.parent.copy()
        other.size = self.size.copy()
        other.set_count = self.set_count
        return other

    def __repr__(self) -> str:
        return f"DisjointSet(n={len(self)}, sets={self.set_count})"


# the merge heuristics treat the union-find itself as the community state
CommunityState = DisjointSet


def make_singletons(n: int) -> DisjointSet:
    return DisjointSet(n)
