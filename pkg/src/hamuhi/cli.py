"""Command-line front end: ``detect``, ``eval``, ``gen`` and ``bench``.

Exit codes: 0 success, 1 usage error, 2 runtime or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bench as bench_mod
from .core import Definition, hierarchy
from .generators import barabasi_albert, erdos_renyi, ring_of_cliques, two_level_hierarchical
from .graph import EdgeListError, load_edge_list, write_edge_list
from .io import PartitionFileError, read_partition, write_partition
from .metrics import RunReport
from .similarity import Variant

EXIT_OK, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _write_json(obj, dest: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if dest is None or dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def cmd_detect(args) -> int:
    t0 = time.perf_counter()
    loaded = load_edge_list(args.input)
    g = loaded.graph
    truths = [read_partition(t, g) for t in args.truth]
    levels = hierarchy(g, args.definition, args.levels, args.k, args.similarity)
    elapsed = time.perf_counter() - t0

    prefix = args.output or str(Path(args.input).with_suffix(""))
    level_reports = []
    for i, lv in enumerate(levels, start=1):
        path = f"{prefix}.level{i}.tsv"
        write_partition(g, lv.partition, path)
        iterations = {
            "community_detection": lv.detection.iterations if lv.detection else 0,
            "hierarchical_level": lv.level.iterations,
        }
        truth = truths[i - 1] if i - 1 < len(truths) else None
        rep = RunReport.evaluate(g, lv.partition, truth, iterations).to_dict()
        del rep["wall_time_seconds"]
        level_reports.append({"level": i, "k": lv.k, "partition_file": Path(path).name, **rep})
        print(f"level {i}: k={lv.k} communities={lv.partition.community_count} -> {path}")

    report = {
        "input": Path(args.input).name,
        **loaded.summary(),
        "config": {
            "k": args.k,
            "definition": Definition(args.definition).value,
            "levels": args.levels,
            "similarity": Variant(args.similarity).value,
        },
        "levels": level_reports,
        "wall_time_seconds": elapsed,
    }
    _write_json(report, f"{prefix}.report.json")
    return EXIT_OK


def cmd_eval(args) -> int:
    g = load_edge_list(args.graph).graph
    p = read_partition(args.partition, g)
    truth = read_partition(args.truth, g) if args.truth else None
    report = RunReport.evaluate(g, p, truth).to_dict()
    del report["iterations"]
    del report["wall_time_seconds"]
    _write_json(report, args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "ring-cliques":
        lg = ring_of_cliques(args.cliques, args.size)
    elif args.kind == "er":
        lg = erdos_renyi(args.n, args.p, args.seed)
    elif args.kind == "ba":
        lg = barabasi_albert(args.n, args.m, args.seed)
    else:
        lg = two_level_hierarchical(args.groups, args.cliques, args.size)

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    edge_path = out.with_name(out.name + ".txt")
    write_edge_list(lg.graph, edge_path)
    written = [str(edge_path)]
    if len(lg.truth_levels) == 1:
        truth_paths = [out.with_name(out.name + ".truth.tsv")]
    else:
        truth_paths = [out.with_name(f"{out.name}.truth{i}.tsv") for i in range(1, len(lg.truth_levels) + 1)]
    for path, truth in zip(truth_paths, lg.truth_levels):
        write_partition(lg.graph, truth, path)
        written.append(str(path))
    print(json.dumps({**lg.meta, **lg.graph.summary(), "files": written}))
    return EXIT_OK


def cmd_bench(args) -> int:
    cases = bench_mod.parse_suite(args.suite, seed=args.seed, mean_degree=args.mean_degree)
    rows = bench_mod.run_bench(cases, args.definition, args.repeats)
    bench_mod.write_csv(rows, sys.stdout if args.out in (None, "-") else args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hamuhi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    definitions = [d.value for d in Definition]

    p = sub.add_parser("detect", help="detect communities in an edge-list file")
    p.add_argument("input")
    p.add_argument("--k", type=_positive, default=2, help="minimum community size (default 2)")
    p.add_argument("--def", dest="definition", choices=definitions, default="weakest")
    p.add_argument("--levels", type=_positive, default=1, help="hierarchy depth (default 1)")
    p.add_argument("--similarity", choices=[v.value for v in Variant], default="modified")
    p.add_argument("--truth", action="append", default=[], help="ground truth for level 1, 2, ... (repeatable)")
    p.add_argument("--output", help="output prefix (default: input path without suffix)")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("eval", help="score a partition file")
    p.add_argument("graph")
    p.add_argument("partition")
    p.add_argument("--truth")
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("gen", help="generate a benchmark graph")
    gsub = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    g = gsub.add_parser("ring-cliques")
    g.add_argument("--cliques", type=int, required=True)
    g.add_argument("--size", type=int, default=3)
    g = gsub.add_parser("er")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=float, required=True)
    g.add_argument("--seed", type=int, default=0)
    g = gsub.add_parser("ba")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g = gsub.add_parser("hier2")
    g.add_argument("--groups", type=int, default=5)
    g.add_argument("--cliques", type=int, default=5)
    g.add_argument("--size", type=int, default=5)
    for g in gsub.choices.values():
        g.add_argument("--out", required=True, help="output prefix")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time community detection over a graph ladder")
    p.add_argument("--suite", action="append", default=[], help="e.g. er:100000,200000 or ring:100,1000 (repeatable)")
    p.add_argument("--def", dest="definition", choices=definitions, default="weak")
    p.add_argument("--repeats", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mean-degree", type=float, default=20.0)
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, EdgeListError, PartitionFileError) as exc:
        print(f"hamuhi: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except ValueError as exc:
        # parameter bounds rejected by the library
        print(f"hamuhi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
