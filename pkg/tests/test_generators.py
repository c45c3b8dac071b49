import io
import math

import numpy as np
import pytest

from hamuhi.core import check_definition
from hamuhi.generators import XorShift64Star, barabasi_albert, erdos_renyi, ring_of_cliques, two_level_hierarchical
from hamuhi.graph import write_edge_list
from hamuhi.metrics import size_distribution
from oracles import xorshift64star_stream


def _edge_text(g):
    buf = io.StringIO()
    write_edge_list(g, buf)
    return buf.getvalue()


def _assert_simple(g):
    assert np.all(g.edges[:, 0] < g.edges[:, 1])
    assert len({tuple(e) for e in g.edges.tolist()}) == g.edge_count


def test_xorshift_reference_values():
    # frozen from the recurrence written out independently in the oracles
    rng = XorShift64Star(0)
    first = [rng.next() for _ in range(3)]
    assert first == xorshift64star_stream(0, 3)
    assert first == [8916199331640804048, 16032783972208265725, 12954103179475586193]
    rng = XorShift64Star(42)
    assert [rng.next() for _ in range(3)] == [3580622183945639842, 10378725325292465923, 8967075514996744559]
    rng = XorShift64Star(2**40 + 7)
    assert [rng.next() for _ in range(50)] == xorshift64star_stream(2**40 + 7, 50)
    assert all(0 <= x < 2**64 for x in first)
    assert XorShift64Star(1).next() != XorShift64Star(0).next()
    rng = XorShift64Star(123)
    xs = [rng.random() for _ in range(2000)]
    assert all(0.0 <= x < 1.0 for x in xs)
    assert abs(np.mean(xs) - 0.5) < 0.05
    assert all(0 <= rng.randbelow(7) < 7 for _ in range(200))
    with pytest.raises(ValueError):
        rng.randbelow(0)


@pytest.mark.parametrize("n, m, vertices, edges", [(5, 3, 15, 20), (3, 4, 12, 21)])
def test_ring_counts(n, m, vertices, edges):
    lg = ring_of_cliques(n, m)
    assert (lg.graph.vertex_count, lg.graph.edge_count) == (vertices, edges)
    assert lg.graph.edge_count == n * (m * (m - 1) // 2 + 1)
    _assert_simple(lg.graph)


def test_ring_layout_and_truth():
    lg = ring_of_cliques(10, 3)
    assert size_distribution(lg.truth) == {3: 10}
    g = lg.graph
    for i in range(10):
        assert g.has_edge(3 * i + 2, (3 * (i + 1)) % 30)
        assert lg.truth.members(i).tolist() == [3 * i, 3 * i + 1, 3 * i + 2]
    for m in (3, 4, 5):
        lg = ring_of_cliques(6, m)
        assert all(check_definition(lg.graph, lg.truth, c, "weak") for c in range(6))


@pytest.mark.parametrize("args", [(2, 3), (3, 2), (0, 5)])
def test_ring_bounds(args):
    with pytest.raises(ValueError):
        ring_of_cliques(*args)


def test_er_extremes():
    g = erdos_renyi(20, 0.0, 1).graph
    assert (g.vertex_count, g.edge_count) == (20, 0)
    g = erdos_renyi(20, 1.0, 1).graph
    assert g.edge_count == 190
    assert erdos_renyi(50, 1e-300, 0).graph.edge_count == 0
    for p in (-0.1, 1.5):
        with pytest.raises(ValueError):
            erdos_renyi(10, p)


def test_er_edge_count_within_four_sigma():
    n, p = 1000, 20 / 999
    mean = n * (n - 1) / 2 * p
    sigma = math.sqrt(mean * (1 - p))
    for seed in range(5):
        g = erdos_renyi(n, p, seed).graph
        _assert_simple(g)
        assert abs(g.edge_count - mean) <= 4 * sigma
        assert abs(g.degrees.mean() - 20) < 1.0


def test_er_determinism():
    assert _edge_text(erdos_renyi(1000, 0.02, 7).graph) == _edge_text(erdos_renyi(1000, 0.02, 7).graph)
    assert _edge_text(erdos_renyi(1000, 0.02, 7).graph) != _edge_text(erdos_renyi(1000, 0.02, 8).graph)


def test_ba_smallest_is_complete():
    for m in (1, 2, 5):
        g = barabasi_albert(m + 1, m, 0).graph
        assert g.edge_count == (m + 1) * m // 2


def test_ba_exact_edge_count():
    g = barabasi_albert(1000, 10, 3).graph
    _assert_simple(g)
    assert g.edge_count == (1000 - 10) * 10 + 10 * 9 // 2
    assert g.degrees.min() >= 10


def test_ba_heavy_tail():
    ratios = []
    for seed in range(20):
        g = barabasi_albert(1000, 5, seed).graph
        ratios.append(g.degrees.max() / g.degrees.mean())
    assert min(ratios) > 5


def test_ba_bounds_and_determinism():
    for n, m in [(5, 0), (5, 5), (3, 7)]:
        with pytest.raises(ValueError):
            barabasi_albert(n, m)
    assert _edge_text(barabasi_albert(300, 4, 9).graph) == _edge_text(barabasi_albert(300, 4, 9).graph)


def test_two_level_counts():
    lg = two_level_hierarchical(5, 5, 5)
    g = lg.graph
    assert g.vertex_count == 125
    assert g.edge_count == 5 * 5 * 10 + 5 * 5 + 5 == 280
    _assert_simple(g)
    lvl1, lvl2 = lg.truth_levels
    assert lg.truth is lvl1
    assert lvl1.community_count == 25 and size_distribution(lvl1) == {5: 25}
    assert lvl2.community_count == 5 and size_distribution(lvl2) == {25: 5}
    # cliques nest inside groups
    for members in lvl1.communities:
        assert len(set(lvl2.assignment[members].tolist())) == 1


def test_two_level_coupling():
    lg = two_level_hierarchical(4, 3, 4)
    g = lg.graph
    lvl1, lvl2 = lg.truth_levels
    a1, a2 = lvl1.assignment, lvl2.assignment
    e = g.edges
    cross_clique = a1[e[:, 0]] != a1[e[:, 1]]
    cross_group = a2[e[:, 0]] != a2[e[:, 1]]
    assert int(cross_group.sum()) == 4
    assert int((cross_clique & ~cross_group).sum()) == 4 * 3
    for members in lvl1.communities:
        sub = np.isin(e[:, 0], members) & np.isin(e[:, 1], members)
        assert int(sub.sum()) == 6


@pytest.mark.parametrize("args", [(1, 5, 5), (5, 1, 5), (5, 5, 2)])
def test_two_level_bounds(args):
    with pytest.raises(ValueError):
        two_level_hierarchical(*args)


def test_meta_records_parameters():
    assert erdos_renyi(10, 0.5, 4).meta == {"generator": "er", "n": 10, "p": 0.5, "seed": 4}
    assert barabasi_albert(10, 2, 4).meta["seed"] == 4
    assert ring_of_cliques(3, 3).meta["generator"]
