"""
.. _PlaneTree:

Plane trees
===========

Ordered rooted trees. A :code:`PlaneTree` is a tuple of child subtrees, a
:code:`LabeledPlaneTree` adds one label per child edge. Vertex colors are
never stored: the root is black and colors alternate with depth.

The JSON form is nested arrays, :code:`[[], [[], []]]` is a root with a leaf
child and a child carrying two leaves. Labels travel as a parallel array in
preorder of edges.
"""
from typing import Any, Iterator, List, Tuple

import attr

from ncposet.types.schema import PlaneTreeSchema


@attr.s(frozen=True, repr=False)
class PlaneTree:
    children = attr.ib(type=Tuple["PlaneTree", ...], default=(), converter=tuple)

    @property
    def size(self) -> int:
        """Number of vertices."""
        return 1 + sum(child.size for child in self.children)

    def degrees(self, is_root: bool = True) -> Iterator[int]:
        """Graph degree of every vertex in preorder."""
        yield len(self.children) + (0 if is_root else 1)
        for child in self.children:
            yield from child.degrees(is_root=False)

    def to_nested(self) -> List[Any]:
        return [child.to_nested() for child in self.children]

    @classmethod
    def from_nested(cls, nested: List[Any]) -> "PlaneTree":
        if not isinstance(nested, list):
            raise TypeError(f"A plane tree is a list of children, got {nested!r}.")
        return cls(tuple(cls.from_nested(child) for child in nested))

    def to_schema(self) -> PlaneTreeSchema:
        return PlaneTreeSchema(tree=self.to_nested())

    def __repr__(self) -> str:
        return f"PlaneTree({self.to_nested()})"


@attr.s(frozen=True, repr=False)
class LabeledPlaneTree:
    """
    A plane tree with an integer on every edge, edges listed with the child they lead to.
    """

    labels = attr.ib(type=Tuple[int, ...], default=(), converter=tuple)
    children = attr.ib(type=Tuple["LabeledPlaneTree", ...], default=(), converter=tuple)

    def __attrs_post_init__(self) -> None:
        if len(self.labels) != len(self.children):
            raise ValueError(
                f"Expected one label per child edge, got {len(self.labels)} labels for"
                f" {len(self.children)} children."
            )

    @property
    def size(self) -> int:
        return 1 + sum(child.size for child in self.children)

    def shape(self) -> PlaneTree:
        return PlaneTree(tuple(child.shape() for child in self.children))

    def edge_labels(self) -> Iterator[int]:
        """Labels in preorder of edges."""
        for label, child in zip(self.labels, self.children):
            yield label
            yield from child.edge_labels()

    def to_schema(self) -> PlaneTreeSchema:
        return PlaneTreeSchema(tree=self.shape().to_nested(), labels=list(self.edge_labels()))

    @classmethod
    def from_schema(cls, schema: PlaneTreeSchema) -> "LabeledPlaneTree":
        if schema.labels is None:
            raise ValueError("A labeled plane tree needs a label array.")
        labels = iter(schema.labels)

        def build(nested: List[Any]) -> "LabeledPlaneTree":
            edge_labels, children = [], []
            for child in nested:
                edge_labels.append(next(labels))
                children.append(build(child))
            return cls(edge_labels, children)

        try:
            tree = build(schema.tree)
        except StopIteration as error:
            raise ValueError("Fewer labels than edges.") from error
        if next(labels, None) is not None:
            raise ValueError("More labels than edges.")
        return tree

    def __repr__(self) -> str:
        parts = ", ".join(f"{label}: {child!r}" for label, child in zip(self.labels, self.children))
        return f"LabeledPlaneTree({{{parts}}})"
