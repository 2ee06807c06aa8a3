"""
.. _ParkingTrees:

d-parking trees
===============

Number the vertices of a d-parking tree in depth-first order, root first. The
parent of the sibling block :math:`i_1, \\dots, i_d` then receives a number
:math:`a_i`, and :math:`(a_1, \\dots, a_k)` is a d-parking function. Every
d-parking function comes from exactly one tree.

.. ipython:: python

    from ncposet.types import DParkingFunction
    from ncposet.parking_trees import parking_to_tree, tree_to_parking, expansion

    tree = parking_to_tree(DParkingFunction(2, (2, 1, 3, 1, 3)))
    tree
    tree_to_parking(expansion(tree))

Joining the DFS numbers of a parent and its block :math:`i_1, \\dots, i_d` for
:math:`i = 1, 2, \\dots` walks up the maximal chain of the same parking function.
"""
import itertools
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from loguru import logger
from networkx.utils import UnionFind

import ncposet.constants as const
from ncposet.chains import enumerate_parking
from ncposet.errors import VerificationError
from ncposet.plane_trees import ShapeConstraint, enumerate_shapes
from ncposet.types.parking import (
    DParkingFunction,
    DParkingTree,
    Label,
    MaximalChain,
    ParkingNode,
)
from ncposet.types.partition import NoncrossingPartition
from ncposet.types.trees import PlaneTree


def dfs_order(tree: DParkingTree, start: int = 1) -> Dict[Label, int]:
    """
    Depth-first numbers of every vertex, keyed by label; the root is :code:`"inf"`.
    """
    return {node.label: start + offset for offset, node in enumerate(tree.root.preorder())}


def _parents(tree: DParkingTree) -> Dict[int, ParkingNode]:
    parents = {}
    for node in tree.root.preorder():
        for child in node.children:
            parents[child.label[0]] = node  # type: ignore[index]
    return parents


def tree_to_parking(tree: DParkingTree) -> DParkingFunction:
    """
    a_i is the depth-first number of the common parent of i_1, …, i_d.
    """
    order = dfs_order(tree)
    parents = _parents(tree)
    return DParkingFunction(tree.d, [order[parents[i].label] for i in range(1, tree.k + 1)])


def _preorder_ids(kids: List[List[int]], node: int = 0) -> List[int]:
    order = [node]
    for child in kids[node]:
        order.extend(_preorder_ids(kids, child))
    return order


def _build(kids: List[List[int]], blocks: Dict[int, List[int]], d: int, node: int, name: Label) -> ParkingNode:
    names = [(i, j) for i in blocks.get(node, []) for j in range(1, d + 1)]
    return ParkingNode(
        name, [_build(kids, blocks, d, child, child_name) for child, child_name in zip(kids[node], names)]
    )


def _grow(values: Sequence[int], d: int, ascending: bool) -> DParkingTree:
    positions: Dict[int, List[int]] = {}
    for index, value in enumerate(values, start=1):
        positions.setdefault(value, []).append(index)

    kids: List[List[int]] = [[]]
    blocks: Dict[int, List[int]] = {}
    for value in sorted(positions):
        order = _preorder_ids(kids)
        if value > len(order):
            raise VerificationError(f"No vertex numbered {value} while growing {tuple(values)}.")
        node = order[value - 1]
        if kids[node]:
            logger.error(f"Vertex {value} already has children while growing {tuple(values)}.")
            raise VerificationError(f"Vertex {value} is not a leaf when its children arrive.")
        blocks[node] = sorted(positions[value], reverse=not ascending)
        for _ in range(d * len(positions[value])):
            kids.append([])
            kids[node].append(len(kids) - 1)
    return DParkingTree(d, len(values), _build(kids, blocks, d, 0, const.INFINITY), relaxed=ascending)


def parking_to_tree(pf: DParkingFunction) -> DParkingTree:
    """
    The d-parking tree of `pf`.

    Values are handled in increasing order. The vertex numbered j is still a leaf when
    its turn comes and receives d children per occurrence of j, the blocks i_1, …, i_d
    for a_i = j placed with larger i to the left.

    :raises VerificationError: If a vertex is missing or not a leaf when its children
        arrive, which the parking inequality rules out.
    """
    return _grow(pf.values, pf.d, ascending=False)


def straighten(tree: DParkingTree) -> DParkingTree:
    """
    The tree of the sorted parking function, sibling blocks in increasing order.

    It has the same shape as `tree`, only the labels move.
    """
    return _grow(sorted(tree_to_parking(tree).values), tree.d, ascending=True)


def expansion(tree: DParkingTree) -> DParkingTree:
    """
    Relabel i_j as ((i − 1)·d + j)_1, a 1-parking tree on the same shape.

    The sibling order is not decreasing any more once d > 1, the result is relaxed.
    """
    d = tree.d

    def relabel(node: ParkingNode) -> ParkingNode:
        name = node.label
        if not isinstance(name, str):
            name = ((name[0] - 1) * d + name[1], 1)
        return ParkingNode(name, [relabel(child) for child in node.children])

    return DParkingTree(1, d * tree.k, relabel(tree.root), relaxed=tree.relaxed or d > 1)


def _components(n: int, joins: Iterable[Sequence[int]]) -> NoncrossingPartition:
    components = UnionFind(range(1, n + 1))
    for group in joins:
        components.union(*group)
    return NoncrossingPartition(n, [tuple(block) for block in components.to_sets()])


def _joins(tree: DParkingTree) -> List[Tuple[int, ...]]:
    """The DFS numbers ω(p_i), ω(i_1), …, ω(i_d) for every i."""
    order = dfs_order(tree)
    parents = _parents(tree)
    return [
        (order[parents[i].label],) + tuple(order[(i, j)] for j in range(1, tree.d + 1))
        for i in range(1, tree.k + 1)
    ]


def tree_to_chain(tree: DParkingTree) -> MaximalChain:
    """
    π_i has the connected components of the parent edges of j_1, …, j_d for j ≤ i.
    """
    joins = _joins(tree)
    return MaximalChain(
        tree.d, [_components(tree.n, joins[:step]) for step in range(tree.k + 1)]
    )


def partition_from_subset(tree: DParkingTree, removed: Iterable[int]) -> NoncrossingPartition:
    """
    Components left after deleting the parent edges of i_1, …, i_d for every i in `removed`.
    """
    removed = set(removed)
    if not removed <= set(range(1, tree.k + 1)):
        raise ValueError(f"Indices {sorted(removed)} are outside [1, {tree.k}].")
    joins = _joins(tree)
    return _components(tree.n, [join for i, join in enumerate(joins, start=1) if i not in removed])


def _shape(node: ParkingNode) -> PlaneTree:
    return PlaneTree(tuple(_shape(child) for child in node.children))


def shape_orbit_key(tree: DParkingTree) -> PlaneTree:
    """The unlabeled plane tree; permuting parking function coordinates keeps it."""
    return _shape(tree.root)


def _splits(items: Tuple[int, ...], sizes: Sequence[int]) -> Iterator[List[Tuple[int, ...]]]:
    if not sizes:
        yield []
        return
    for chosen in itertools.combinations(items, sizes[0]):
        rest = tuple(item for item in items if item not in chosen)
        for tail in _splits(rest, sizes[1:]):
            yield [chosen] + tail


def _numbered(shape: PlaneTree) -> List[List[int]]:
    """Children of every vertex as preorder numbers, the root is 0."""
    kids: List[List[int]] = []

    def visit(node: PlaneTree) -> int:
        number = len(kids)
        kids.append([])
        for child in node.children:
            kids[number].append(visit(child))
        return number

    visit(shape)
    return kids


def enumerate_parking_trees(d: int, k: int) -> Iterator[DParkingTree]:
    """
    Every d-parking tree on dk + 1 vertices: shapes with child counts divisible by d,
    then every way to hand out the indices 1, …, k to the sibling blocks.
    """
    if d < 1 or k < 0:
        raise ValueError(f"Expected d >= 1 and k >= 0, got d={d}, k={k}.")
    for shape in enumerate_shapes(d * k + 1, ShapeConstraint.d_divisible(d)):
        kids = _numbered(shape)
        parents = [number for number, row in enumerate(kids) if row]
        sizes = [len(kids[number]) // d for number in parents]
        for split in _splits(tuple(range(1, k + 1)), sizes):
            blocks = {number: sorted(group, reverse=True) for number, group in zip(parents, split)}
            yield DParkingTree(d, k, _build(kids, blocks, d, 0, const.INFINITY))


def orbits(d: int, k: int) -> Dict[PlaneTree, List[DParkingFunction]]:
    """
    Parking functions grouped by the shape of their trees.
    """
    grouped: Dict[PlaneTree, List[DParkingFunction]] = {}
    for pf in enumerate_parking(d, k):
        grouped.setdefault(shape_orbit_key(parking_to_tree(pf)), []).append(pf)
    return grouped


def orbit_sizes(d: int, k: int) -> List[int]:
    return sorted((len(group) for group in orbits(d, k).values()), reverse=True)
