import pytest

from ncposet.errors import LabelConditionError
from ncposet.formulas import closed_form
from ncposet.partitions import is_d_indivisible, noncrossing_partitions
from ncposet.plane_trees import (
    ShapeConstraint,
    enumerate_shapes,
    has_degrees_1_mod_d,
    label_violations,
    partition_to_tree,
    reconstruct_labels,
    tree_to_partition,
)
from ncposet.types import LabeledPlaneTree, NoncrossingPartition, PlaneTree

FIGURE = "1|2,9,10|3|4,5,6,7,8|11"


def _black_parents(tree: LabeledPlaneTree, depth: int = 0):
    if depth % 2 == 0 and tree.children:
        yield depth, tree.labels
    for child in tree.children:
        yield from _black_parents(child, depth + 1)


def test_figure_tree() -> None:
    tree = partition_to_tree(NoncrossingPartition.parse(FIGURE))
    assert tree.labels == (1,)
    white = tree.children[0]
    assert white.labels == (10, 11)
    assert sorted(tree.edge_labels()) == list(range(1, 12))
    assert max(_black_parents(tree)) == (4, (4, 5, 6, 7))
    assert tree_to_partition(tree) == NoncrossingPartition.parse(FIGURE)
    assert has_degrees_1_mod_d(tree, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8])
def test_round_trips_on_every_partition(n) -> None:
    for pi in noncrossing_partitions(n):
        tree = partition_to_tree(pi)
        assert tree.size == n + 1
        assert label_violations(tree) == []
        assert tree_to_partition(tree) == pi
        assert reconstruct_labels(tree.shape()) == tree


@pytest.mark.parametrize("n", [3, 5, 7])
def test_degrees_match_indivisibility(n) -> None:
    for pi in noncrossing_partitions(n):
        tree = partition_to_tree(pi)
        for d in (1, 2, 3):
            assert has_degrees_1_mod_d(tree, d) == is_d_indivisible(pi, d)


@pytest.mark.parametrize("n,d", [(5, 2), (7, 2), (7, 3), (9, 2)])
def test_degree_filtered_shape_counts(n, d) -> None:
    shapes = list(enumerate_shapes(n + 1, ShapeConstraint.degree_1_mod_d(d)))
    assert len(shapes) == closed_form("cardinality", d, k=(n - 1) // d)


@pytest.mark.parametrize("vertices,count", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 14), (6, 42)])
def test_unconstrained_shapes_are_catalan(vertices, count) -> None:
    assert len(list(enumerate_shapes(vertices))) == count


def test_d_ary_shapes() -> None:
    shapes = list(enumerate_shapes(5, ShapeConstraint.d_ary(2)))
    assert len(shapes) == 2
    assert len(shapes) == closed_form("small_blocks_singleton", 2, k=2)


def test_d_divisible_shapes() -> None:
    shapes = list(enumerate_shapes(5, ShapeConstraint.d_divisible(2)))
    assert all(len(node.children) % 2 == 0 for shape in shapes for node in _nodes(shape))
    assert len(shapes) == 3


def _nodes(tree: PlaneTree):
    yield tree
    for child in tree.children:
        yield from _nodes(child)


def test_label_violation_is_reported() -> None:
    tree = LabeledPlaneTree([2, 1], [LabeledPlaneTree(), LabeledPlaneTree()])
    assert label_violations(tree) == [2, 5]
    with pytest.raises(LabelConditionError) as error:
        tree_to_partition(tree)
    assert error.value.condition == 2


def test_labels_not_a_permutation() -> None:
    tree = LabeledPlaneTree([1, 3], [LabeledPlaneTree(), LabeledPlaneTree()])
    assert 1 in label_violations(tree)


def test_single_vertex_has_no_labels() -> None:
    with pytest.raises(ValueError):
        reconstruct_labels(PlaneTree())
    with pytest.raises(ValueError):
        tree_to_partition(LabeledPlaneTree())


def test_bad_constraint() -> None:
    with pytest.raises(ValueError):
        ShapeConstraint("degree", 2)
    with pytest.raises(ValueError):
        ShapeConstraint.d_ary(0)
    with pytest.raises(ValueError):
        list(enumerate_shapes(0))
