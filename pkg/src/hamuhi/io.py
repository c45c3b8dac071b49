"""Partition / ground-truth files: ``vertex_id<TAB>community_id`` per line."""

from __future__ import annotations

import os
from typing import IO, Iterable

import numpy as np

from .graph import COMMENT_PREFIXES, Graph
from .partition import Partition

__all__ = ["PartitionFileError", "write_partition", "read_partition", "parse_partition"]


class PartitionFileError(ValueError):
    pass


def write_partition(g: Graph, p: Partition, dest: str | os.PathLike | IO) -> None:
    """One line per vertex in ascending id order, dense community ids."""
    if p.vertex_count != g.vertex_count:
        raise ValueError("partition does not cover the graph's vertices")
    labels = g.label_list()
    text = "".join(f"{labels[v]}\t{c}\n" for v, c in enumerate(p.assignment.tolist()))
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        dest.write(text)


def parse_partition(lines: Iterable[str], g: Graph) -> Partition:
    """Map a two-column file onto ``g``'s vertices.

    Vertex tokens are matched against the graph's original labels; community
    tokens may be arbitrary. Every vertex must be listed exactly once.
    """
    index = {lab: v for v, lab in enumerate(g.label_list())}
    comm_ids: dict[str, int] = {}
    labels = np.full(g.vertex_count, -1, dtype=np.int64)
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise PartitionFileError(f"line {lineno}: expected 2 columns, got {len(toks)}")
        v = index.get(toks[0])
        if v is None:
            raise PartitionFileError(f"line {lineno}: vertex {toks[0]!r} is not in the graph")
        if labels[v] != -1:
            raise PartitionFileError(f"line {lineno}: vertex {toks[0]!r} listed twice")
        labels[v] = comm_ids.setdefault(toks[1], len(comm_ids))
    missing = np.flatnonzero(labels == -1)
    if len(missing):
        names = ", ".join(g.label(int(v)) for v in missing[:5])
        raise PartitionFileError(f"{len(missing)} vertices have no community (e.g. {names})")
    return Partition.from_labels(labels)


def read_partition(source: str | os.PathLike | IO, g: Graph) -> Partition:
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            return parse_partition(fh, g)
    return parse_partition(source, g)
