"""
.. _NoncrossingPartition:

Noncrossing partitions
======================

A :ref:`NoncrossingPartition <NoncrossingPartition>` is a set partition of
:math:`[n] = \\{1, \\dots, n\\}` where no two blocks :math:`B, C` hold
:math:`i < j < k < l` with :math:`i, k \\in B` and :math:`j, l \\in C`.

Values are canonical at construction: each block ascending, blocks sorted by
their minimum. Equality is structural.

.. ipython:: python

    from ncposet.types import NoncrossingPartition

    pi = NoncrossingPartition.parse("1|2,9,10|3|4,5,6,7,8|11")
    pi.n, len(pi)
    str(pi)

Dual partitions live on the primed ground set :math:`1' < \\dots < n'` which we
store on :math:`[n]` too, the primes are a view concern.
"""
from typing import Iterable, Iterator, List, Sequence, Tuple

import attr

from ncposet.types.schema import PartitionSchema

Block = Tuple[int, ...]


def canonical_blocks(blocks: Iterable[Iterable[int]]) -> Tuple[Block, ...]:
    sorted_blocks = [tuple(sorted(block)) for block in blocks]
    return tuple(sorted(sorted_blocks, key=lambda block: block[0] if block else 0))


def index_blocks(n: int, blocks: Sequence[Block]) -> Tuple[int, ...]:
    """
    Map every element of [n] to the index of its block.

    The result is 1-based on elements, position 0 is unused.

    :raises ValueError: If blocks are not a set partition of [n].
    """
    if n < 1:
        raise ValueError(f"Ground set size should be positive, got {n}.")
    owner = [-1] * (n + 1)
    for index, block in enumerate(blocks):
        if not block:
            raise ValueError("Blocks cannot be empty.")
        for element in block:
            if not isinstance(element, int) or not 1 <= element <= n:
                raise ValueError(f"Element {element} is outside [1, {n}].")
            if owner[element] != -1:
                raise ValueError(f"Element {element} appears in more than one block.")
            owner[element] = index
    missing = [element for element in range(1, n + 1) if owner[element] == -1]
    if missing:
        raise ValueError(f"Elements {missing} are not covered by any block.")
    return tuple(owner)


def first_crossing(owner: Sequence[int], blocks: Sequence[Block]) -> Tuple[int, int]:
    """
    Scan [n] once keeping open blocks on a stack.

    An element of an open block that is not on top of the stack closes a crossing.

    :return: The indices of two crossing blocks, or (-1, -1).
    """
    stack: List[int] = []
    opened = [False] * len(blocks)
    for element in range(1, len(owner)):
        index = owner[element]
        block = blocks[index]
        if opened[index]:
            if stack[-1] != index:
                return stack[-1], index
            if element == block[-1]:
                stack.pop()
        elif len(block) > 1:
            opened[index] = True
            stack.append(index)
    return -1, -1


@attr.s(frozen=True, repr=False)
class NoncrossingPartition:
    n = attr.ib(type=int, validator=attr.validators.instance_of(int))
    blocks = attr.ib(type=Tuple[Block, ...], converter=canonical_blocks)
    owner = attr.ib(type=Tuple[int, ...], init=False, eq=False, hash=False)

    def __attrs_post_init__(self) -> None:
        owner = index_blocks(self.n, self.blocks)
        left, right = first_crossing(owner, self.blocks)
        if left != -1:
            raise ValueError(
                f"Blocks {self.blocks[left]} and {self.blocks[right]} cross."
            )
        object.__setattr__(self, "owner", owner)

    @classmethod
    def bottom(cls, n: int) -> "NoncrossingPartition":
        return cls(n, [(element,) for element in range(1, n + 1)])

    @classmethod
    def top(cls, n: int) -> "NoncrossingPartition":
        return cls(n, [tuple(range(1, n + 1))])

    @classmethod
    def parse(cls, text: str) -> "NoncrossingPartition":
        """
        Read "1|2,9,10|3" style text, n is the largest element.

        :raises ValueError: On malformed text or an invalid partition.
        """
        try:
            blocks = [
                tuple(int(item) for item in chunk.split(","))
                for chunk in text.strip().split("|")
            ]
        except ValueError as error:
            raise ValueError(f"Cannot read a partition from {text!r}.") from error
        n = max(max(block) for block in blocks)
        return cls(n, blocks)

    @classmethod
    def from_schema(cls, schema: PartitionSchema) -> "NoncrossingPartition":
        return cls(schema.n, [tuple(block) for block in schema.blocks])

    def to_schema(self) -> PartitionSchema:
        return PartitionSchema(n=self.n, blocks=[list(block) for block in self.blocks])

    def block_of(self, element: int) -> int:
        return self.owner[element]

    def rank(self, d: int) -> int:
        return (self.n - len(self.blocks)) // d

    def sizes(self) -> List[int]:
        return [len(block) for block in self.blocks]

    def has_singleton_one(self) -> bool:
        return self.blocks[0] == (1,)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __str__(self) -> str:
        return "|".join(",".join(str(element) for element in block) for block in self.blocks)

    def __repr__(self) -> str:
        return f"NoncrossingPartition(n={self.n}, blocks={str(self)!r})"


@attr.s(frozen=True, auto_attribs=True)
class DualAdjacency:
    """
    A block of π touching a block of the dual π′, with the label γ of the channel.
    """

    block_index: int
    dual_block_index: int
    gamma: int
