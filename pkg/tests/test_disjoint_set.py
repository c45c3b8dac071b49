import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamuhi.disjoint_set import DisjointSet, make_singletons


def test_fresh_state():
    s = make_singletons(3)
    assert [s.find(v) for v in range(3)] == [0, 1, 2]
    assert [s.size_of(v) for v in range(3)] == [1, 1, 1]
    assert s.set_count == 3


def test_empty_state():
    s = make_singletons(0)
    assert s.set_count == 0 and len(s) == 0
    assert s.roots().tolist() == []


def test_dolphins_start_state():
    assert make_singletons(62).set_count == 62


def test_union_basic():
    s = make_singletons(5)
    assert s.union(0, 1) == 0
    assert s.find(0) == s.find(1)
    assert s.size_of(1) == 2 and s.set_count == 4
    s.union(1, 2)
    assert s.find(2) == s.find(0)
    assert s.size_of(2) == 3


def test_union_self_is_noop():
    s = make_singletons(4)
    assert s.union(0, 0) == 0
    assert s.set_count == 4
    s.union(1, 2)
    s.union(2, 1)
    assert s.set_count == 3


def test_chain_of_unions():
    n = 50
    s = make_singletons(n)
    for i in range(n - 1):
        s.union(i, i + 1)
    assert s.set_count == 1
    assert s.size_of(n - 1) == n


def test_representative_ties_go_to_smaller_id():
    s = make_singletons(6)
    assert s.union(5, 3) == 3
    assert s.union(4, 1) == 1
    # equal sizes 2 and 2: smaller representative wins
    assert s.union(3, 1) == 1
    # larger set absorbs smaller regardless of id
    assert s.union(0, 5) == 1


@pytest.mark.parametrize("op", ["find", "size_of"])
def test_out_of_range(op):
    s = make_singletons(3)
    with pytest.raises(IndexError):
        getattr(s, op)(3)
    with pytest.raises(IndexError):
        getattr(s, op)(-1)
    with pytest.raises(IndexError):
        s.union(0, 7)


def test_copy_is_independent():
    s = make_singletons(4)
    s.union(0, 1)
    t = s.copy()
    t.union(2, 3)
    assert s.set_count == 3 and t.set_count == 2


@given(st.integers(1, 100).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=200))))
@settings(max_examples=200, deadline=None)
def test_matches_naive_labeling(case):
    n, ops = case
    s = make_singletons(n)
    label = list(range(n))
    for a, b in ops:
        la, lb = label[a], label[b]
        merged = la != lb
        before = s.set_count
        s.union(a, b)
        assert s.set_count == before - merged
        if merged:
            label = [la if x == lb else x for x in label]
    for a in range(n):
        for b in range(0, n, 7):
            assert (s.find(a) == s.find(b)) == (label[a] == label[b])
    roots = s.roots()
    assert len(set(roots.tolist())) == s.set_count == len(set(label))
    assert all(s.parent[r] == r for r in roots.tolist())
    assert int(sum(s.size[r] for r in set(roots.tolist()))) == n
    for v in range(n):
        assert s.size_of(v) == label.count(label[v])


@given(st.integers(1, 60).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=120))))
@settings(max_examples=200, deadline=None)
def test_union_pairs_matches_scalar_unions(case):
    n, ops = case
    batched, scalar = make_singletons(n), make_singletons(n)
    merges = batched.union_pairs([a for a, _ in ops], [b for _, b in ops])
    for a, b in ops:
        scalar.union(a, b)
    assert merges == n - scalar.set_count == n - batched.set_count
    assert batched.roots().tolist() == scalar.roots().tolist()
    assert [batched.size_of(v) for v in range(n)] == [scalar.size_of(v) for v in range(n)]


def test_union_pairs_validates():
    s = make_singletons(3)
    with pytest.raises(IndexError):
        s.union_pairs([0], [3])
    with pytest.raises(ValueError):
        s.union_pairs([0, 1], [2])
    assert s.union_pairs([], []) == 0
