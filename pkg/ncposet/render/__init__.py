"""
.. _Render:

SVG figures
===========

Three pictures, each returned as SVG text:

- the circle representation of a partition: :math:`1, \\dots, n` clockwise on a
  circle with the primed points :math:`i'` between :math:`i` and :math:`i + 1`.
  Blocks are solid polygons on the unprimed points, dual blocks dashed polygons on
  the primed points, primed labels sit outside the circle;
- a labeled plane tree, black and white vertices alternating with depth and the
  labels on the edges;
- a d-parking tree, vertex labels :math:`i_j` inside the vertices and depth-first
  numbers beside them.

Coordinates are the only floating point values in the package.
"""
import io
import math
from typing import Dict, List, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.patches as mpatches  # noqa: E402
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.axes import Axes  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from ncposet.parking_trees import dfs_order  # noqa: E402
from ncposet.partitions import kreweras_dual  # noqa: E402
from ncposet.types.parking import DParkingTree, ParkingNode  # noqa: E402
from ncposet.types.partition import NoncrossingPartition  # noqa: E402
from ncposet.types.trees import LabeledPlaneTree  # noqa: E402

Point = Tuple[float, float]

BLOCK_COLOR = "#1f4e79"
DUAL_COLOR = "#c55a11"


def _to_svg(fig: Figure) -> str:
    buffer = io.StringIO()
    fig.savefig(buffer, format="svg", bbox_inches="tight")
    plt.close(fig)
    return buffer.getvalue()


def _canvas(size: Tuple[float, float]) -> Tuple[Figure, Axes]:
    fig = plt.figure(figsize=size)
    ax = fig.gca()
    ax.set_aspect("equal")
    ax.axis("off")
    return fig, ax


def _on_circle(position: float, n: int, radius: float = 1.0) -> Point:
    # clockwise from the top
    angle = math.pi / 2 - 2 * math.pi * (position - 1) / n
    return radius * math.cos(angle), radius * math.sin(angle)


def _polygon(ax: Axes, points: Sequence[Point], color: str, dashed: bool) -> None:
    style = "dashed" if dashed else "solid"
    if len(points) == 1:
        ax.plot(*points[0], marker="o", color=color, markersize=4)
        return
    ax.add_patch(
        mpatches.Polygon(
            points,
            closed=True,
            facecolor=color if not dashed else "none",
            alpha=0.35 if not dashed else 1.0,
            edgecolor=color,
            linestyle=style,
            linewidth=1.5,
        )
    )


def render_circle(pi: NoncrossingPartition) -> str:
    """
    The circle representation of `pi` with its Kreweras dual.
    """
    n = pi.n
    fig, ax = _canvas((6, 6))
    ax.add_patch(mpatches.Circle((0, 0), 1.0, fill=False, color="gray", linewidth=0.8))
    for block in pi.blocks:
        _polygon(ax, [_on_circle(element, n) for element in block], BLOCK_COLOR, dashed=False)
    for block in kreweras_dual(pi).blocks:
        _polygon(ax, [_on_circle(element + 0.5, n) for element in block], DUAL_COLOR, dashed=True)
    for element in range(1, n + 1):
        x, y = _on_circle(element, n, 1.12)
        ax.text(x, y, str(element), ha="center", va="center", fontsize=11)
        x, y = _on_circle(element + 0.5, n, 1.12)
        ax.text(x, y, f"{element}'", ha="center", va="center", fontsize=9, color=DUAL_COLOR)
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    return _to_svg(fig)


def _layout(children: Sequence[Sequence[int]]) -> Dict[int, Point]:
    """Leaves on consecutive columns, parents centered above their children."""
    positions: Dict[int, Point] = {}
    column = [0]

    def place(node: int, depth: int) -> float:
        if not children[node]:
            x = float(column[0])
            column[0] += 1
        else:
            below = [place(child, depth + 1) for child in children[node]]
            x = (below[0] + below[-1]) / 2
        positions[node] = (x, -float(depth))
        return x

    place(0, 0)
    return positions


def _flatten_plane(tree: LabeledPlaneTree) -> Tuple[List[List[int]], Dict[int, int]]:
    children: List[List[int]] = []
    edge_labels: Dict[int, int] = {}

    def visit(vertex: LabeledPlaneTree) -> int:
        number = len(children)
        children.append([])
        for label, child in zip(vertex.labels, vertex.children):
            index = visit(child)
            edge_labels[index] = label
            children[number].append(index)
        return number

    visit(tree)
    return children, edge_labels


def _draw_edges(ax: Axes, children: Sequence[Sequence[int]], positions: Dict[int, Point]) -> None:
    for parent, row in enumerate(children):
        for child in row:
            (x0, y0), (x1, y1) = positions[parent], positions[child]
            ax.plot([x0, x1], [y0, y1], color="black", linewidth=1, zorder=1)


def render_plane_tree(tree: LabeledPlaneTree) -> str:
    """
    A labeled plane tree, root on top, black at even depth.
    """
    children, edge_labels = _flatten_plane(tree)
    positions = _layout(children)
    width = max(x for x, _ in positions.values()) + 1
    depth = -min(y for _, y in positions.values()) + 1
    fig, ax = _canvas((max(3.0, width), max(2.0, 1.2 * depth)))
    _draw_edges(ax, children, positions)

    depths = {node: -int(y) for node, (_, y) in positions.items()}
    for node, (x, y) in positions.items():
        face = "black" if depths[node] % 2 == 0 else "white"
        ax.add_patch(mpatches.Circle((x, y), 0.12, facecolor=face, edgecolor="black", zorder=2))
    for parent, row in enumerate(children):
        for child in row:
            (x0, y0), (x1, y1) = positions[parent], positions[child]
            ax.text(
                (x0 + x1) / 2 + 0.08, (y0 + y1) / 2, str(edge_labels[child]), fontsize=9, color=BLOCK_COLOR
            )
    ax.set_xlim(-0.5, width - 0.5)
    ax.set_ylim(-depth + 0.5, 0.5)
    return _to_svg(fig)


def _flatten_parking(root: ParkingNode) -> Tuple[List[List[int]], List[ParkingNode]]:
    children: List[List[int]] = []
    nodes: List[ParkingNode] = []

    def visit(node: ParkingNode) -> int:
        number = len(children)
        children.append([])
        nodes.append(node)
        for child in node.children:
            children[number].append(visit(child))
        return number

    visit(root)
    return children, nodes


def render_parking_tree(tree: DParkingTree) -> str:
    """
    A d-parking tree with vertex labels inside and depth-first numbers beside them.
    """
    children, nodes = _flatten_parking(tree.root)
    order = dfs_order(tree)
    positions = _layout(children)
    width = max(x for x, _ in positions.values()) + 1
    depth = -min(y for _, y in positions.values()) + 1
    fig, ax = _canvas((max(3.0, 1.2 * width), max(2.0, 1.2 * depth)))
    _draw_edges(ax, children, positions)

    for index, (x, y) in positions.items():
        node = nodes[index]
        name = "∞" if isinstance(node.label, str) else f"{node.label[0]}$_{node.label[1]}$"
        ax.add_patch(mpatches.Circle((x, y), 0.25, facecolor="white", edgecolor="black", zorder=2))
        ax.text(x, y, name, ha="center", va="center", fontsize=9, zorder=3)
        ax.text(x + 0.3, y + 0.15, str(order[node.label]), fontsize=8, color=DUAL_COLOR)
    ax.set_xlim(-0.6, width - 0.4)
    ax.set_ylim(-depth + 0.4, 0.6)
    return _to_svg(fig)
