import io

import pytest

from hamuhi.bench import er_case, parse_suite, ring_case, run_bench, write_csv
from hamuhi.datasets import data_dir, load_dolphins
from hamuhi.metrics import size_distribution


def test_missing_dolphins_explains_where_to_put_files(tmp_path):
    with pytest.raises(FileNotFoundError, match="HAMUHI_DATA_DIR"):
        load_dolphins(tmp_path)


def test_dolphins_loader_reads_directory(tmp_path, monkeypatch):
    # a stand-in with the same file layout; the real data are not bundled
    (tmp_path / "dolphins.txt").write_text("Beak Fish\nFish Grin\nGrin Beak\nJet Zap\nZap Knit\nKnit Jet\nGrin Jet\n")
    (tmp_path / "dolphins_truth.tsv").write_text(
        "Beak\tA\nFish\tA\nGrin\tA\nJet\tB\nZap\tB\nKnit\tB\n"
    )
    monkeypatch.setenv("HAMUHI_DATA_DIR", str(tmp_path))
    assert data_dir() == tmp_path
    lg = load_dolphins()
    assert (lg.graph.vertex_count, lg.graph.edge_count) == (6, 7)
    assert size_distribution(lg.truth) == {3: 2}
    assert lg.truth_levels == [lg.truth]


def test_parse_suite():
    cases = parse_suite(["er:1e4,2e4", "ring:10", "ring4:5", "ba:100/3"])
    assert [c.name for c in cases] == ["er-10000", "er-20000", "ring-10x3", "ring-5x4", "ba-100-3"]
    assert parse_suite([]) == []
    for bad in ["er:", "lfr:10", "ring:x"]:
        with pytest.raises(ValueError):
            parse_suite([bad])


def test_er_case_targets_edge_count():
    g = er_case(20000, mean_degree=20, seed=1).build()
    assert g.vertex_count == 2000
    assert abs(g.edge_count - 20000) < 600


def test_run_bench_and_csv():
    rows = run_bench([ring_case(50), ring_case(50, 4)], "weakest", repeats=2)
    assert [(r.n, r.m) for r in rows] == [(150, 200), (200, 350)]
    assert all(r.seconds >= 0 and r.iterations >= 1 for r in rows)
    buf = io.StringIO()
    write_csv(rows, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "graph,n,m,iterations,seconds"
    assert lines[1].startswith("ring-50x3,150,200,")
