"""Partition quality: modularity, NMI, and community-size histograms."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .graph import Graph
from .partition import Partition

__all__ = [
    "UndefinedMetricError",
    "RunReport",
    "modularity",
    "nmi",
    "entropy",
    "mutual_information",
    "size_distribution",
]

NMI_NORMALIZATION = "arithmetic"


class UndefinedMetricError(ValueError):
    pass


def _labels(p: Partition | Sequence[int] | np.ndarray) -> np.ndarray:
    if isinstance(p, Partition):
        return p.assignment
    return np.asarray(p)


def modularity(g: Graph, p: Partition | Sequence[int]) -> float:
    """Newman-Girvan modularity, ``sum_c e_c/M - (d_c/2M)^2``."""
    labels = _labels(p)
    if len(labels) != g.vertex_count:
        raise ValueError("partition does not cover the graph's vertices")
    m = g.edge_count
    if m == 0:
        raise UndefinedMetricError("modularity is undefined for a graph without edges")
    labels = Partition.from_labels(labels).assignment
    k = int(labels.max()) + 1 if len(labels) else 0
    lu = labels[g.edges[:, 0]]
    lv = labels[g.edges[:, 1]]
    internal = np.bincount(lu[lu == lv], minlength=k).astype(np.float64)
    total_degree = np.bincount(labels, weights=g.degrees.astype(np.float64), minlength=k)
    return float(np.sum(internal / m - (total_degree / (2.0 * m)) ** 2))


def _contingency(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _, ia = np.unique(a, return_inverse=True)
    _, ib = np.unique(b, return_inverse=True)
    ia, ib = ia.ravel(), ib.ravel()
    table = np.zeros((ia.max() + 1, ib.max() + 1), dtype=np.float64)
    np.add.at(table, (ia, ib), 1.0)
    return table


def entropy(p: Partition | Sequence[int]) -> float:
    labels = _labels(p)
    n = len(labels)
    if n == 0:
        return 0.0
    _, counts = np.unique(labels, return_counts=True)
    q = counts / n
    return float(-np.sum(q * np.log(q)))


def mutual_information(p1: Partition | Sequence[int], p2: Partition | Sequence[int]) -> float:
    a, b = _labels(p1), _labels(p2)
    n = len(a)
    table = _contingency(a, b) / n
    pa = table.sum(axis=1, keepdims=True)
    pb = table.sum(axis=0, keepdims=True)
    nz = table > 0  # 0 log 0 := 0
    return float(np.sum(table[nz] * np.log(table[nz] / (pa @ pb)[nz])))


def nmi(p1: Partition | Sequence[int], p2: Partition | Sequence[int]) -> float:
    """``2 I(X;Y) / (H(X) + H(Y))`` with natural logs.

    Two trivial (single-community) partitions score 1.
    """
    a, b = _labels(p1), _labels(p2)
    if len(a) != len(b):
        raise ValueError(f"partitions cover different vertex sets ({len(a)} vs {len(b)} vertices)")
    if len(a) == 0:
        raise ValueError("NMI of empty partitions is undefined")
    table = _contingency(a, b)
    if np.count_nonzero(table) == table.shape[0] == table.shape[1]:
        # same grouping up to relabeling; skip the rounding of 2I/(H1+H2)
        return 1.0
    if 1 in table.shape:
        # one side is a single community: the labels share no information
        return 0.0
    h1, h2 = entropy(a), entropy(b)
    value = 2.0 * mutual_information(a, b) / (h1 + h2)
    return float(min(1.0, max(0.0, value)))


def size_distribution(p: Partition) -> dict[int, int]:
    """Map community size -> number of communities of that size."""
    sizes, counts = np.unique(p.sizes, return_counts=True)
    return {int(s): int(c) for s, c in zip(sizes, counts)}


@dataclass
class RunReport:
    community_count: int
    modularity: float | None
    size_histogram: dict[int, int]
    iterations: dict[str, int] = field(default_factory=dict)
    wall_time_seconds: float = 0.0
    nmi: float | None = None
    nmi_normalization: str = NMI_NORMALIZATION

    @classmethod
    def evaluate(
        cls,
        g: Graph,
        p: Partition,
        truth: Partition | None = None,
        iterations: dict[str, int] | None = None,
        wall_time_seconds: float = 0.0,
    ) -> RunReport:
        q = modularity(g, p) if g.edge_count else None
        return cls(
            community_count=p.community_count,
            modularity=q,
            size_histogram=size_distribution(p),
            iterations=dict(iterations or {}),
            wall_time_seconds=wall_time_seconds,
            nmi=nmi(p, truth) if truth is not None else None,
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["size_histogram"] = {str(k): v for k, v in sorted(self.size_histogram.items())}
        return d

    def to_json(self, **kwargs) -> str:
        kwargs.setdefault("indent", 2)
        return json.dumps(self.to_dict(), **kwargs)
