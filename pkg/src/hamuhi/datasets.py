"""Bundled real-world fixtures.

The dolphins social network (62 vertices, 159 edges, two observed groups)
is looked up as ``dolphins.txt`` (edge list) and ``dolphins_truth.tsv``
(``vertex<TAB>group``) in the package ``data`` directory, or in the
directory named by ``HAMUHI_DATA_DIR``.
"""

from __future__ import annotations

import os
from pathlib import Path

from .generators import LabeledGraph
from .graph import load_edge_list
from .io import read_partition

__all__ = ["data_dir", "load_dolphins"]

DOLPHINS_EDGES = "dolphins.txt"
DOLPHINS_TRUTH = "dolphins_truth.tsv"


def data_dir() -> Path:
    env = os.environ.get("HAMUHI_DATA_DIR")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "data"


def load_dolphins(directory: str | os.PathLike | None = None) -> LabeledGraph:
    root = Path(directory) if directory is not None else data_dir()
    edges, truth = root / DOLPHINS_EDGES, root / DOLPHINS_TRUTH
    missing = [p.name for p in (edges, truth) if not p.is_file()]
    if missing:
        raise FileNotFoundError(
            f"dolphins fixture not found in {root} (missing {', '.join(missing)}); "
            "place the edge list and the two-group ground truth there or set HAMUHI_DATA_DIR"
        )
    g = load_edge_list(edges).graph
    groups = read_partition(truth, g)
    return LabeledGraph(g, groups, {"dataset": "dolphins"}, [groups])
