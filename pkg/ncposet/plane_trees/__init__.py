"""
.. _PlaneTrees:

Plane trees and noncrossing partitions
======================================

A noncrossing partition :math:`\\pi` of :math:`[n]` is a tree: blocks of
:math:`\\pi` (black) and of its dual (white) are the vertices, and every
:math:`i \\in [n]` is an edge from the block of :math:`i` to the dual block of
:math:`i'`. Rooting the tree at the block of :math:`1` and ordering children by
their edge label gives a plane tree on :math:`n + 1` vertices.

The labels can be recovered from the shape alone. Below a black vertex each
child edge label precedes the labels of that child's subtree, below a white
vertex it follows them.

.. ipython:: python

    from ncposet.types import NoncrossingPartition
    from ncposet.plane_trees import partition_to_tree, reconstruct_labels, tree_to_partition

    tree = partition_to_tree(NoncrossingPartition.parse("1|2,9,10|3|4,5,6,7,8|11"))
    tree.labels, tree.children[0].labels
    str(tree_to_partition(reconstruct_labels(tree.shape())))
"""
import functools
from typing import Dict, Iterator, List, Optional, Tuple

import attr

import ncposet.constants as const
from ncposet.errors import LabelConditionError
from ncposet.partitions import adjacencies
from ncposet.types.partition import NoncrossingPartition
from ncposet.types.trees import LabeledPlaneTree, PlaneTree

CONSTRAINT_KINDS = (const.ALL, const.DEGREE_1_MOD_D, const.D_DIVISIBLE, const.D_ARY)


@attr.s(frozen=True)
class ShapeConstraint:
    """
    Which child counts a vertex may have.

    - all: any.
    - degree_1_mod_d: the root has 1 (mod d) children, other vertices 0 (mod d), so every
      vertex has graph degree 1 (mod d).
    - d_divisible: every vertex has 0 (mod d) children.
    - d_ary: every vertex has 0 or d children.
    """

    kind = attr.ib(type=str, validator=attr.validators.in_(CONSTRAINT_KINDS))
    d = attr.ib(type=int, default=1, validator=attr.validators.instance_of(int))

    @d.validator
    def _check_d(self, _: "attr.Attribute[int]", value: int) -> None:
        if value < 1:
            raise ValueError(f"d should be positive, got {value}.")

    @classmethod
    def unconstrained(cls) -> "ShapeConstraint":
        return cls(const.ALL)

    @classmethod
    def degree_1_mod_d(cls, d: int) -> "ShapeConstraint":
        return cls(const.DEGREE_1_MOD_D, d)

    @classmethod
    def d_divisible(cls, d: int) -> "ShapeConstraint":
        return cls(const.D_DIVISIBLE, d)

    @classmethod
    def d_ary(cls, d: int) -> "ShapeConstraint":
        return cls(const.D_ARY, d)

    def allows(self, children: int, is_root: bool) -> bool:
        if self.kind == const.ALL:
            return True
        if self.kind == const.DEGREE_1_MOD_D:
            return children % self.d == (1 % self.d if is_root else 0)
        if self.kind == const.D_DIVISIBLE:
            return children % self.d == 0
        return children in (0, self.d)


@functools.lru_cache(maxsize=None)
def _trees(constraint: ShapeConstraint, vertices: int, is_root: bool) -> Tuple[PlaneTree, ...]:
    trees = []
    for count in range(vertices):
        if constraint.allows(count, is_root):
            trees.extend(PlaneTree(forest) for forest in _forests(constraint, vertices - 1, count))
    return tuple(trees)


@functools.lru_cache(maxsize=None)
def _forests(
    constraint: ShapeConstraint, vertices: int, count: int
) -> Tuple[Tuple[PlaneTree, ...], ...]:
    if count == 0:
        return ((),) if vertices == 0 else ()
    forests = []
    for first in range(1, vertices - count + 2):
        for head in _trees(constraint, first, False):
            for tail in _forests(constraint, vertices - first, count - 1):
                forests.append((head,) + tail)
    return tuple(forests)


def enumerate_shapes(vertices: int, constraint: Optional[ShapeConstraint] = None) -> Iterator[PlaneTree]:
    """
    Every plane tree on `vertices` vertices allowed by `constraint`, each once.

    Trees come out grouped by the root's child count, then by the sizes of the subtrees
    from left to right.

    :param vertices: Number of vertices, at least 1.
    :type vertices: int
    :param constraint: Defaults to no constraint.
    :type constraint: Optional[ShapeConstraint]
    :raises ValueError: If `vertices` is not positive.
    """
    if vertices < 1:
        raise ValueError(f"A plane tree has at least one vertex, got {vertices}.")
    yield from _trees(constraint or ShapeConstraint.unconstrained(), vertices, True)


def _label(shape: PlaneTree, start: int, black: bool) -> Tuple[LabeledPlaneTree, int]:
    labels: List[int] = []
    children: List[LabeledPlaneTree] = []
    cursor = start
    for child in shape.children:
        if black:
            labels.append(cursor)
            subtree, cursor = _label(child, cursor + 1, False)
        else:
            subtree, cursor = _label(child, cursor, True)
            labels.append(cursor)
            cursor += 1
        children.append(subtree)
    return LabeledPlaneTree(labels, children), cursor


def reconstruct_labels(shape: PlaneTree) -> LabeledPlaneTree:
    """
    The unique labeling of `shape` satisfying the label properties.

    Each subtree with m vertices takes the next m − 1 labels. A black vertex places
    its edge label before the block taken by the child's subtree, a white vertex
    places it after.

    :raises ValueError: For a single vertex, which carries no edge.
    """
    if shape.size < 2:
        raise ValueError("A labeled plane tree needs at least one edge.")
    tree, _ = _label(shape, 1, True)
    return tree


def partition_to_tree(pi: NoncrossingPartition) -> LabeledPlaneTree:
    """
    The labeled plane tree of a noncrossing partition.

    :param pi: Any noncrossing partition.
    :type pi: NoncrossingPartition
    :return: A tree on n + 1 vertices rooted at the block of 1.
    :rtype: LabeledPlaneTree
    """
    black: Dict[int, List[Tuple[int, int]]] = {}
    white: Dict[int, List[Tuple[int, int]]] = {}
    for adjacency in adjacencies(pi):
        black.setdefault(adjacency.block_index, []).append(
            (adjacency.gamma, adjacency.dual_block_index)
        )
        white.setdefault(adjacency.dual_block_index, []).append(
            (adjacency.gamma, adjacency.block_index)
        )

    def build(index: int, is_black: bool, parent_label: int) -> LabeledPlaneTree:
        edges = sorted(
            edge for edge in (black if is_black else white)[index] if edge[0] != parent_label
        )
        return LabeledPlaneTree(
            [label for label, _ in edges],
            [build(other, not is_black, label) for label, other in edges],
        )

    return build(pi.block_of(1), True, 0)


def _walk(
    tree: LabeledPlaneTree, black: bool, parent_label: Optional[int], found: List[int]
) -> List[int]:
    """
    Record violated properties 2 to 6 below `tree`, return its subtree labels.
    """
    labels = list(tree.labels)
    below = [_walk(child, not black, label, found) for label, child in zip(labels, tree.children)]

    if any(left >= right for left, right in zip(labels, labels[1:])):
        found.append(2)
    if parent_label is not None and labels:
        incident = labels + [parent_label]
        if parent_label != (max(incident) if black else min(incident)):
            found.append(3)

    subtree: List[int] = []
    for label, child_labels in zip(labels, below):
        subtree.append(label)
        subtree.extend(child_labels)
    if subtree:
        if black and min(subtree) != labels[0]:
            found.append(5)
        if not black and max(subtree) != labels[-1]:
            found.append(5)
        if max(subtree) - min(subtree) + 1 != len(subtree):
            found.append(4)

    for left in range(len(labels)):
        for right in range(left + 1, len(labels)):
            if below[right] and labels[left] > min(below[right]):
                found.append(6)
            if below[left] and labels[right] < max(below[left]):
                found.append(6)
    return subtree


def label_violations(tree: LabeledPlaneTree) -> List[int]:
    """
    Every violated label property, as sorted distinct numbers.

    1. labels are a permutation of [n];
    2. child edge labels increase from left to right;
    3. a nonroot black (white) vertex has its largest (smallest) incident label on the parent edge;
    4. the labels of every subtree form an interval;
    5. a black (white) vertex has its smallest (largest) subtree label on the leftmost (rightmost) child edge;
    6. a child edge label is below every label of the subtrees to its right and above every
       label of the subtrees to its left.
    """
    found: List[int] = []
    labels = _walk(tree, True, None, found)
    if sorted(labels) != list(range(1, len(labels) + 1)):
        found.append(1)
    return sorted(set(found))


def tree_to_partition(tree: LabeledPlaneTree) -> NoncrossingPartition:
    """
    Read the blocks back from black vertices: a block is the set of labels on the edges
    around its black vertex.

    :raises LabelConditionError: Carrying the first violated label property.
    :raises ValueError: For a tree without edges.
    """
    if not tree.children:
        raise ValueError("A labeled plane tree needs at least one edge.")
    violations = label_violations(tree)
    if violations:
        raise LabelConditionError(violations[0], f"properties {violations} fail on {tree!r}.")

    blocks: List[List[int]] = []

    def collect(vertex: LabeledPlaneTree, black: bool, parent_label: Optional[int]) -> None:
        if black:
            blocks.append(list(vertex.labels) + ([parent_label] if parent_label is not None else []))
        for label, child in zip(vertex.labels, vertex.children):
            collect(child, not black, label)

    collect(tree, True, None)
    return NoncrossingPartition(tree.size - 1, blocks)


def has_degrees_1_mod_d(tree: LabeledPlaneTree, d: int) -> bool:
    """
    Every vertex has graph degree 1 (mod d), that is the partition and its dual are
    d-indivisible.
    """
    return all((degree - 1) % d == 0 for degree in tree.shape().degrees())
