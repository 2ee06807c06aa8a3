"""
Tests for plane trees
"""
import pytest

from ncposet.types import LabeledPlaneTree, PlaneTree, PlaneTreeSchema


def test_plane_tree_nested_form() -> None:
    tree = PlaneTree.from_nested([[], [[], []]])
    assert tree.size == 5
    assert list(tree.degrees()) == [2, 1, 3, 1, 1]
    assert tree.to_nested() == [[], [[], []]]
    assert PlaneTree.from_nested(PlaneTreeSchema.parse_raw(tree.to_schema().json()).tree) == tree
    with pytest.raises(TypeError):
        PlaneTree.from_nested([[], 3])


def test_labeled_plane_tree() -> None:
    tree = LabeledPlaneTree([1, 3], [LabeledPlaneTree(), LabeledPlaneTree([2], [LabeledPlaneTree()])])
    assert tree.size == 4
    assert list(tree.edge_labels()) == [1, 3, 2]
    assert tree.shape() == PlaneTree.from_nested([[], [[]]])
    schema = tree.to_schema()
    assert schema.labels == [1, 3, 2]
    assert LabeledPlaneTree.from_schema(schema) == tree


def test_labels_must_match_edges() -> None:
    with pytest.raises(ValueError):
        LabeledPlaneTree([1], [])
    with pytest.raises(ValueError):
        LabeledPlaneTree.from_schema(PlaneTreeSchema(tree=[[], []], labels=[1]))
    with pytest.raises(ValueError):
        LabeledPlaneTree.from_schema(PlaneTreeSchema(tree=[[]], labels=[1, 2]))
    with pytest.raises(ValueError):
        LabeledPlaneTree.from_schema(PlaneTreeSchema(tree=[[]]))
