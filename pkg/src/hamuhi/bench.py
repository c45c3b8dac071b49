"""Timing ladder for the merge heuristic.

A suite is a list of cases, each a generated graph. For every case the
edge similarities are computed once, then ``community_detection`` is timed
(best of ``repeats``) and one CSV row ``graph,n,m,iterations,seconds`` is
emitted.
"""

from __future__ import annotations

import csv
import gc
import os
import time
from dataclasses import astuple, dataclass
from typing import IO, Callable, Iterable

from .core import Definition, run_community_detection
from .generators import barabasi_albert, erdos_renyi, ring_of_cliques
from .graph import Graph
from .similarity import compute_all

__all__ = ["BenchCase", "BenchRow", "parse_suite", "er_case", "ring_case", "ba_case", "run_bench", "write_csv"]

CSV_HEADER = ("graph", "n", "m", "iterations", "seconds")


@dataclass(frozen=True)
class BenchCase:
    name: str
    build: Callable[[], Graph]


@dataclass(frozen=True)
class BenchRow:
    graph: str
    n: int
    m: int
    iterations: int
    seconds: float


def er_case(edges: int, mean_degree: float = 20.0, seed: int = 0) -> BenchCase:
    """G(n, p) sized so the expected edge count is ``edges``."""
    n = max(2, round(2 * edges / mean_degree))
    p = min(1.0, mean_degree / (n - 1))
    return BenchCase(f"er-{edges}", lambda: erdos_renyi(n, p, seed).graph)


def ring_case(n_cliques: int, clique_size: int = 3) -> BenchCase:
    return BenchCase(f"ring-{n_cliques}x{clique_size}", lambda: ring_of_cliques(n_cliques, clique_size).graph)


def ba_case(n: int, m: int, seed: int = 0) -> BenchCase:
    return BenchCase(f"ba-{n}-{m}", lambda: barabasi_albert(n, m, seed).graph)


def parse_suite(specs: Iterable[str], seed: int = 0, mean_degree: float = 20.0) -> list[BenchCase]:
    """Parse ``kind:a,b,c`` ladder specs.

    ``er:100000,200000`` target edge counts; ``ring:100,1000`` numbers of
    3-cliques (``ring4:...`` for 4-cliques); ``ba:N/M,...`` vertex and
    attachment counts.
    """
    cases: list[BenchCase] = []
    for entry in specs:
        kind, _, values = entry.partition(":")
        items = [v for v in values.split(",") if v]
        if not items:
            raise ValueError(f"empty ladder in {entry!r}")
        for item in items:
            if kind == "er":
                cases.append(er_case(int(float(item)), mean_degree, seed))
            elif kind in ("ring", "ring3", "ring4"):
                cases.append(ring_case(int(item), 4 if kind == "ring4" else 3))
            elif kind == "ba":
                n, _, m = item.partition("/")
                cases.append(ba_case(int(n), int(m), seed))
            else:
                raise ValueError(f"unknown bench graph kind {kind!r}")
    return cases


def run_bench(
    cases: Iterable[BenchCase],
    definition: Definition | str = Definition.WEAK,
    repeats: int = 1,
) -> list[BenchRow]:
    rows = []
    for case in cases:
        g = case.build()
        sims = compute_all(g)
        best = float("inf")
        iterations = 0
        for _ in range(max(1, repeats)):
            # collector pauses are noise at these time scales, as in timeit
            gc_was_enabled = gc.isenabled()
            gc.disable()
            try:
                t0 = time.perf_counter()
                _, trace = run_community_detection(g, sims, definition)
                best = min(best, time.perf_counter() - t0)
            finally:
                if gc_was_enabled:
                    gc.enable()
            iterations = trace.iterations
        rows.append(BenchRow(case.name, g.vertex_count, g.edge_count, iterations, best))
    return rows


def write_csv(rows: Iterable[BenchRow], dest: str | os.PathLike | IO) -> None:
    def _write(fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for row in rows:
            vals = astuple(row)
            w.writerow(vals[:-1] + (f"{vals[-1]:.6f}",))

    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            _write(fh)
    else:
        _write(dest)
