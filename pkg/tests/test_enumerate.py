import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from bicyclic_estrada.canon import canonical_form
from bicyclic_estrada.enumerate import (
    class_labels,
    enumerate_bicyclic,
    enumerate_bicyclic_bruteforce,
    enumerate_class,
    kernels,
    rooted_trees,
)
from bicyclic_estrada.graph import GraphError, build_g1, build_g2, build_infty, build_theta, classify

# rooted trees on 1..10 nodes (OEIS A000081)
ROOTED_TREE_COUNTS = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]


def atlas_bicyclic_count(n):
    return sum(
        1 for g in graph_atlas_g() if g.number_of_nodes() == n and g.number_of_edges() == n + 1 and nx.is_connected(g)
    )


def test_rooted_tree_counts():
    assert [sum(1 for _ in rooted_trees(s)) for s in range(1, 11)] == ROOTED_TREE_COUNTS
    assert list(rooted_trees(0)) == []


def test_small_orders(classes):
    assert classes(3) == ()
    four = classes(4)
    assert len(four) == 1 and four[0].form == canonical_form(build_theta(2, 2, 1))


@pytest.mark.parametrize("n", range(4, 8))
def test_counts_match_external_atlas(classes, n):
    assert len(classes(n)) == atlas_bicyclic_count(n)


@pytest.mark.parametrize("n", range(4, 8))
def test_structured_equals_bruteforce(classes, n):
    assert [gc.form for gc in classes(n)] == enumerate_bicyclic_bruteforce(n)


@pytest.mark.slow
def test_structured_equals_bruteforce_n8(classes):
    assert [gc.form for gc in classes(8)] == enumerate_bicyclic_bruteforce(8)


@pytest.mark.parametrize("n", range(4, 10))
def test_classes_are_distinct_bicyclic(classes, n):
    found = classes(n)
    forms = [gc.form for gc in found]
    assert len(set(forms)) == len(forms) == len(sorted(forms))
    for gc in found:
        assert classify(gc.graph).bicyclic and gc.graph.n == n
        assert canonical_form(gc.graph) == gc.form
    assert canonical_form(build_g1(n)) in forms
    if n >= 5:
        assert canonical_form(build_g2(n)) in forms


def test_range_errors():
    with pytest.raises(GraphError):
        enumerate_bicyclic(13)
    with pytest.raises(GraphError):
        enumerate_bicyclic_bruteforce(9)


def test_kernel_list_sizes():
    for kind, params in kernels(9):
        G = build_infty(*params) if kind == "infinity" else build_theta(*params)
        assert G.n <= 9


class TestClasses:
    def test_examples(self, classes):
        theta = enumerate_class(4, "theta", 3, 3, classes(4))
        assert [gc.form for gc in theta] == [canonical_form(build_theta(2, 2, 1))]
        inf = enumerate_class(5, "infinity", 3, 3, classes(5))
        assert [gc.form for gc in inf] == [canonical_form(build_infty(3, 3, 1))]

    @pytest.mark.parametrize("n", range(4, 9))
    def test_classes_partition(self, classes, n):
        everything = classes(n)
        seen = []
        for kind, p, q in class_labels(n):
            members = enumerate_class(n, kind, p, q, everything)
            assert members
            seen += [gc.form for gc in members]
        assert sorted(seen) == [gc.form for gc in everything]

    def test_order_of_arguments(self, classes):
        a = enumerate_class(7, "theta", 5, 4, classes(7))
        b = enumerate_class(7, "theta", 4, 5, classes(7))
        assert a == b and a
