from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = ["Partition"]


@dataclass(frozen=True, eq=False)
class Partition:
    """Vertex -> community labeling with dense labels ``0..k-1``.

    Labels are assigned in order of each community's smallest vertex, so two
    labelings describing the same grouping produce identical partitions.
    """

    assignment: np.ndarray
    communities: list[np.ndarray] = field(repr=False)
    sizes: np.ndarray = field(repr=False)

    @classmethod
    def from_labels(cls, labels: Sequence[int] | np.ndarray) -> Partition:
        labels = np.asarray(labels)
        if labels.ndim != 1:
            raise ValueError("labels must be one-dimensional")
        n = len(labels)
        if n == 0:
            empty = np.zeros(0, dtype=np.int64)
            return cls(empty, [], empty.copy())
        _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
        # relabel so communities are numbered by their first vertex
        rank = np.empty(len(first), dtype=np.int64)
        rank[np.argsort(first, kind="stable")] = np.arange(len(first))
        assignment = rank[inverse.ravel()]
        order = np.argsort(assignment, kind="stable")
        sizes = np.bincount(assignment, minlength=len(first))
        communities = np.split(order, np.cumsum(sizes)[:-1])
        assignment.setflags(write=False)
        return cls(assignment, communities, sizes)

    @classmethod
    def from_communities(cls, communities: Sequence[Sequence[int]], n: int | None = None) -> Partition:
        """Build from member lists; every vertex must appear exactly once."""
        if n is None:
            n = sum(len(c) for c in communities)
        labels = np.full(n, -1, dtype=np.int64)
        for i, members in enumerate(communities):
            members = np.asarray(members, dtype=np.int64)
            if len(members) and (members.min() < 0 or members.max() >= n):
                raise ValueError("community member out of range")
            if np.any(labels[members] != -1):
                raise ValueError("communities overlap")
            labels[members] = i
        if np.any(labels == -1):
            raise ValueError("communities do not cover all vertices")
        return cls.from_labels(labels)

    @classmethod
    def single(cls, n: int) -> Partition:
        return cls.from_labels(np.zeros(n, dtype=np.int64))

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls.from_labels(np.arange(n))

    @property
    def vertex_count(self) -> int:
        return len(self.assignment)

    @property
    def community_count(self) -> int:
        return len(self.sizes)

    def members(self, c: int) -> np.ndarray:
        if not 0 <= c < self.community_count:
            raise IndexError(f"community {c} out of range 0..{self.community_count - 1}")
        return self.communities[c]

    def __len__(self) -> int:
        return self.community_count

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return np.array_equal(self.assignment, other.assignment)

    __hash__ = None  # type: ignore[assignment]
