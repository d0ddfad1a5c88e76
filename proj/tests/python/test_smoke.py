import numpy as np
import pytest

import levelanc as la


def walk_up(parents, v, hops):
    for _ in range(hops):
        v = parents[v]
    return v


def test_four_node_tree():
    t = la.Tree.from_parent_array([-1, 0, 0, 1])
    idx = la.LevelAncestorIndex(t)
    assert [idx.label_of(v) for v in range(4)] == [1, 2, 4, 3]
    assert idx.depth_array(1) == [2, 4]
    assert idx.node_of(4) == 2
    assert idx.level_ancestor(3, 1) == 1
    assert idx.kth_ancestor(3, 2) == 0
    assert idx.build_visits == 4


def test_errors_carry_codes():
    with pytest.raises(la.LevelAncestorError) as err:
        la.Tree.from_parent_array([-1, -1])
    assert err.value.code == "MultipleRoots"

    idx = la.LevelAncestorIndex(la.generate("path", 4))
    with pytest.raises(la.LevelAncestorError) as err:
        idx.level_ancestor(0, 5)
    assert err.value.code == "DepthBelowNode"
    assert isinstance(err.value, ValueError)


@pytest.mark.parametrize("layout", [la.SearchLayout.SORTED, la.SearchLayout.EYTZINGER])
def test_matches_baselines(layout):
    t = la.generate("random_attachment", 300, seed=4)
    parents = t.parents
    idx = la.LevelAncestorIndex(t, layout)
    jt = la.JumpTable(t)
    for v in range(len(t)):
        dv = t.depth(v)
        for d in range(dv + 1):
            want = walk_up(parents, v, dv - d)
            assert idx.level_ancestor(v, d) == want
            assert la.naive_la(t, v, d) == want
            assert la.jump_la(jt, t, v, d) == want


def test_vectorized_queries():
    t = la.generate("balanced_kary:3", 1000)
    idx = la.LevelAncestorIndex(t)
    nodes = np.arange(1000, dtype=np.int32)
    depths = np.zeros(1000, dtype=np.int32)
    assert (idx.level_ancestor_many(nodes, depths) == 0).all()
    out = idx.level_ancestor_many(np.array([5, 999]), np.array([10, 1]))
    assert out[0] == -1
    assert out[1] == idx.level_ancestor(999, 1)


def test_stats_and_predecessor():
    idx = la.LevelAncestorIndex(la.generate("star", 1025))
    node, stats = idx.level_ancestor_with_stats(700, 1)
    assert node == 700
    assert stats.array_len == 1024
    assert stats.comparisons <= 11
    assert la.predecessor_search([5, 9, 12, 40], 12) == 2
    assert la.predecessor_search([2, 3], 1) is None


def test_snapshot_round_trip():
    idx = la.LevelAncestorIndex(la.generate("caterpillar", 101))
    data = idx.to_bytes()
    back = la.LevelAncestorIndex.from_bytes(data)
    assert back.to_bytes() == data
    assert back.level_ancestor(100, 0) == 0


def test_generators_and_bench():
    assert la.generate_parents("path", 4) == [-1, 0, 1, 2]
    assert la.generate_parents("random_attachment", 50, 1) == la.generate_parents("random_attachment", 50, 1)
    rows = la.run_bench(["random_attachment"], [256, 512], queries=20, seed=1)
    assert [(r.method, r.n) for r in rows] == [
        ("paper_index", 256), ("jump_pointer", 256), ("naive", 256),
        ("paper_index", 512), ("jump_pointer", 512), ("naive", 512),
    ]
    assert rows[0].comparisons_mean is not None
    assert rows[1].comparisons_mean is None
