import numpy as np
import pytest

from mfperc.annotations import StructureError, CapacityError
from mfperc.config import DEFAULTS
from mfperc.coupling import LabelledTree, covering_tree_size, build_covering_tree
from mfperc.graph import complete_graph
from mfperc_test.util import petersen_graph, cycle_graph


def test_covering_tree_size():
    assert covering_tree_size(3, 0) == 1
    assert covering_tree_size(3, 2) == 10
    assert covering_tree_size(4, 3) == 1 + 4 + 12 + 36


def test_structure():
    g = petersen_graph()
    tree = LabelledTree(g, 0, 4)

    assert tree.size == covering_tree_size(3, 4)
    assert list(tree.label[tree.level(1)]) == [1, 4, 5]
    for i in range(1, tree.size):
        parent = tree.parent[i]
        assert parent < i
        assert tree.depth[i] == tree.depth[parent] + 1
        assert g.has_edge(tree.label[parent], tree.label[i])
        if parent > 0:
            assert tree.label[i] != tree.label[tree.parent[parent]]


def test_child():
    tree = build_covering_tree(complete_graph(4), 0, 2)
    one = tree.child(0, 1)

    assert tree.label[one] == 1
    assert list(tree.label[tree.children(one)]) == [2, 3]
    with pytest.raises(KeyError):
        tree.child(one, 0)


def test_ancestors():
    tree = LabelledTree(petersen_graph(), 0, 3)
    ancestors = tree.ancestors()

    for i in range(tree.size):
        k = tree.depth[i]
        assert ancestors[i, k] == i
        assert ancestors[i, 0] == 0
        if k > 0:
            assert ancestors[i, k - 1] == tree.parent[i]
        assert (ancestors[i, k + 1:] < 0).all()


def test_degree_two_rejected():
    with pytest.raises(StructureError):
        LabelledTree(cycle_graph(5), 0, 3)


def test_budget(monkeypatch):
    monkeypatch.setitem(DEFAULTS, "covering_tree_node_budget", 20)
    with pytest.raises(CapacityError):
        LabelledTree(petersen_graph(), 0, 3)
