import pytest

from ncposet.chains import enumerate_parking
from ncposet.parking_trees import parking_to_tree
from ncposet.plane_trees import partition_to_tree
from ncposet.render import render_circle, render_parking_tree, render_plane_tree
from ncposet.types import DParkingFunction, NoncrossingPartition

FIGURE = "1|2,9,10|3|4,5,6,7,8|11"


@pytest.mark.parametrize("text", [FIGURE, "1", "1,2,3|4|5", "1|2|3"])
def test_circle(text) -> None:
    svg = render_circle(NoncrossingPartition.parse(text))
    assert svg.lstrip().startswith("<?xml")
    assert "<svg" in svg


def test_plane_tree() -> None:
    svg = render_plane_tree(partition_to_tree(NoncrossingPartition.parse(FIGURE)))
    assert "<svg" in svg
    assert svg.rstrip().endswith("</svg>")


def test_parking_trees() -> None:
    assert "<svg" in render_parking_tree(parking_to_tree(DParkingFunction(2, (2, 1, 3, 1, 3))))
    for pf in enumerate_parking(1, 2):
        assert "<svg" in render_parking_tree(parking_to_tree(pf))


def test_single_vertex_parking_tree() -> None:
    assert "<svg" in render_parking_tree(parking_to_tree(DParkingFunction(1, ())))
