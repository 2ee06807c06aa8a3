"""
.. _Parking:

Parking functions, maximal chains and parking trees
===================================================

A d-parking function is a sequence :math:`(a_1, \\dots, a_k)` of positive integers
whose sorted rearrangement satisfies :math:`a_{(i)} \\le d(i - 1) + 1`.

A d-parking tree is a plane tree on :math:`dk + 1` vertices. The root is labeled
:code:`"inf"`, every other vertex carries a pair :math:`(i, j)` with
:math:`i \\in [k]` and :math:`j \\in [d]`. The vertices :math:`i_1, \\dots, i_d`
are consecutive siblings and sibling blocks are ordered with larger :math:`i`
to the left.

.. ipython:: python

    from ncposet.types import DParkingFunction

    pf = DParkingFunction(2, (2, 1, 3, 1, 3))
    pf.k, str(pf)
"""
from typing import Any, Iterator, List, Sequence, Tuple, Union

import attr

import ncposet.constants as const
from ncposet.types.partition import Block, NoncrossingPartition
from ncposet.types.schema import ParkingFunctionSchema, ParkingTreeSchema

Label = Union[str, Tuple[int, int]]


def is_d_parking(values: Sequence[int], d: int) -> bool:
    """
    The sorted values satisfy a_(i) ≤ d·(i − 1) + 1.
    """
    if d < 1:
        raise ValueError(f"d should be positive, got {d}.")
    return all(
        1 <= value <= d * position + 1 for position, value in enumerate(sorted(values))
    )


@attr.s(frozen=True, repr=False)
class DParkingFunction:
    d = attr.ib(type=int, validator=attr.validators.instance_of(int))
    values = attr.ib(type=Tuple[int, ...], converter=tuple)

    @values.validator
    def _check_values(self, _: "attr.Attribute[Tuple[int, ...]]", values: Tuple[int, ...]) -> None:
        if not is_d_parking(values, self.d):
            raise ValueError(f"{values} is not a {self.d}-parking function.")

    @property
    def k(self) -> int:
        return len(self.values)

    @property
    def n(self) -> int:
        return self.d * self.k + 1

    def sorted(self) -> "DParkingFunction":
        return DParkingFunction(self.d, sorted(self.values))

    def replicate(self) -> "DParkingFunction":
        """Every coordinate repeated d times, a 1-parking function of length dk."""
        return DParkingFunction(1, [value for value in self.values for _ in range(self.d)])

    def to_schema(self) -> ParkingFunctionSchema:
        return ParkingFunctionSchema(d=self.d, values=list(self.values))

    @classmethod
    def from_schema(cls, schema: ParkingFunctionSchema) -> "DParkingFunction":
        return cls(schema.d, schema.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(value) for value in self.values) + ")"

    def __repr__(self) -> str:
        return f"DParkingFunction(d={self.d}, values={self})"


def _refines(lower: NoncrossingPartition, upper: NoncrossingPartition) -> bool:
    return all(len({upper.block_of(element) for element in block}) == 1 for block in lower.blocks)


@attr.s(frozen=True, repr=False)
class MaximalChain:
    """
    Partitions 0̂ = π_0 ⋖ π_1 ⋖ … ⋖ π_k = 1̂, each step merging d + 1 blocks.
    """

    d = attr.ib(type=int, validator=attr.validators.instance_of(int))
    partitions = attr.ib(type=Tuple[NoncrossingPartition, ...], converter=tuple)

    def __attrs_post_init__(self) -> None:
        # ncposet.partitions imports ncposet.types
        from ncposet.partitions import is_d_indivisible

        if not self.partitions:
            raise ValueError("A maximal chain has at least one partition.")
        n = self.partitions[0].n
        if len(self.partitions[0]) != n or len(self.partitions[-1]) != 1:
            raise ValueError("A maximal chain runs from all singletons to the single block.")
        for pi in self.partitions:
            if pi.n != n or not is_d_indivisible(pi, self.d):
                raise ValueError(f"{pi} is not an element of NC^{self.d}_{n}.")
        for lower, upper in zip(self.partitions, self.partitions[1:]):
            if len(lower) - len(upper) != self.d or not _refines(lower, upper):
                raise ValueError(f"{lower} to {upper} does not merge {self.d + 1} blocks.")
            merged = merged_blocks(lower, upper)
            joined = tuple(sorted(element for block in merged for element in block))
            if len(merged) != self.d + 1 or joined not in upper.blocks:
                raise ValueError(f"{lower} to {upper} is not a single merge of {self.d + 1} blocks.")

    @property
    def n(self) -> int:
        return self.partitions[0].n

    @property
    def k(self) -> int:
        return len(self.partitions) - 1

    def steps(self) -> Iterator[Tuple[NoncrossingPartition, NoncrossingPartition]]:
        return zip(self.partitions, self.partitions[1:])

    def __iter__(self) -> Iterator[NoncrossingPartition]:
        return iter(self.partitions)

    def __len__(self) -> int:
        return len(self.partitions)

    def __repr__(self) -> str:
        return "MaximalChain(" + " < ".join(str(pi) for pi in self.partitions) + ")"


def merged_blocks(lower: NoncrossingPartition, upper: NoncrossingPartition) -> List[Block]:
    """The blocks of `lower` that `upper` joins, ordered by their minima."""
    kept = set(upper.blocks)
    return [block for block in lower.blocks if block not in kept]


@attr.s(frozen=True, repr=False)
class ParkingNode:
    label = attr.ib(type=Label)
    children = attr.ib(type=Tuple["ParkingNode", ...], default=(), converter=tuple)

    @property
    def size(self) -> int:
        return 1 + sum(child.size for child in self.children)

    def preorder(self) -> Iterator["ParkingNode"]:
        yield self
        for child in self.children:
            yield from child.preorder()

    def groups(self, d: int) -> List[Tuple["ParkingNode", ...]]:
        """Children cut into consecutive runs of d siblings."""
        return [self.children[start : start + d] for start in range(0, len(self.children), d)]

    def to_nested(self) -> List[Any]:
        label = self.label if isinstance(self.label, str) else list(self.label)
        return [label, [child.to_nested() for child in self.children]]

    @classmethod
    def from_nested(cls, nested: List[Any]) -> "ParkingNode":
        try:
            label, children = nested
        except (TypeError, ValueError) as error:
            raise ValueError(f"A parking tree node is [label, children], got {nested!r}.") from error
        if isinstance(label, list):
            label = tuple(label)
        return cls(label, [cls.from_nested(child) for child in children])

    def __repr__(self) -> str:
        name = self.label if isinstance(self.label, str) else f"{self.label[0]}_{self.label[1]}"
        if not self.children:
            return name
        return f"{name}(" + ", ".join(repr(child) for child in self.children) + ")"


@attr.s(frozen=True, repr=False)
class DParkingTree:
    """
    :param relaxed: Skip the larger-index-to-the-left order of sibling blocks. Straightened
        trees and expansions need it.
    """

    d = attr.ib(type=int, validator=attr.validators.instance_of(int))
    k = attr.ib(type=int, validator=attr.validators.instance_of(int))
    root = attr.ib(type=ParkingNode)
    relaxed = attr.ib(type=bool, default=False, kw_only=True)

    def __attrs_post_init__(self) -> None:
        if self.d < 1 or self.k < 0:
            raise ValueError(f"Expected d >= 1 and k >= 0, got d={self.d}, k={self.k}.")
        if self.root.label != const.INFINITY:
            raise ValueError(f"The root is labeled {const.INFINITY!r}, got {self.root.label!r}.")
        if self.root.size != self.d * self.k + 1:
            raise ValueError(f"Expected {self.d * self.k + 1} vertices, got {self.root.size}.")
        seen = []
        for node in self.root.preorder():
            if len(node.children) % self.d:
                raise ValueError(f"{node!r} has a child count that is not a multiple of {self.d}.")
            indices = []
            for group in node.groups(self.d):
                labels = [child.label for child in group]
                index = labels[0][0] if isinstance(labels[0], tuple) else None
                if index is None or labels != [(index, j) for j in range(1, self.d + 1)]:
                    raise ValueError(f"Siblings {labels} are not a block i_1, ..., i_{self.d}.")
                indices.append(index)
            if not self.relaxed and indices != sorted(indices, reverse=True):
                raise ValueError(f"Sibling blocks {indices} should decrease from left to right.")
            seen.extend(indices)
        if sorted(seen) != list(range(1, self.k + 1)):
            raise ValueError(f"Sibling block indices {sorted(seen)} should be 1, ..., {self.k}.")

    @property
    def n(self) -> int:
        return self.d * self.k + 1

    def to_schema(self) -> ParkingTreeSchema:
        return ParkingTreeSchema(d=self.d, k=self.k, tree=self.root.to_nested())

    @classmethod
    def from_schema(cls, schema: ParkingTreeSchema, relaxed: bool = False) -> "DParkingTree":
        return cls(schema.d, schema.k, ParkingNode.from_nested(schema.tree), relaxed=relaxed)

    def __repr__(self) -> str:
        return f"DParkingTree(d={self.d}, k={self.k}, {self.root!r})"
