"""
.. _GradedPoset:

Graded posets of noncrossing partitions
=======================================

Elements are stored in a fixed order: by rank, then by canonical form. Covers
point upwards, :code:`covers[i]` lists the elements covering element :code:`i`.
"""
import functools
from typing import Dict, Iterator, List, Tuple

import attr

import ncposet.constants as const
from ncposet.formulas import closed_form
from ncposet.types.partition import NoncrossingPartition
from ncposet.types.schema import PosetSchema


@attr.s(frozen=True, repr=False, hash=False)
class GradedPoset:
    n = attr.ib(type=int)
    d = attr.ib(type=int)
    elements = attr.ib(type=Tuple[NoncrossingPartition, ...], converter=tuple)
    covers = attr.ib(type=Tuple[Tuple[int, ...], ...], converter=lambda rows: tuple(tuple(row) for row in rows))
    rank_of = attr.ib(type=Tuple[int, ...], converter=tuple)
    positions = attr.ib(type=Dict[NoncrossingPartition, int], init=False, eq=False)

    def __attrs_post_init__(self) -> None:
        if not self.elements:
            raise ValueError("A graded poset needs at least one element.")
        if not len(self.elements) == len(self.covers) == len(self.rank_of):
            raise ValueError("Elements, covers and ranks should have equal lengths.")
        object.__setattr__(
            self, "positions", {element: index for index, element in enumerate(self.elements)}
        )
        minima = [index for index, rank in enumerate(self.rank_of) if rank == 0]
        maxima = [index for index, row in enumerate(self.covers) if not row]
        if len(minima) != 1 or len(maxima) != 1:
            raise ValueError(
                f"Expected a unique minimum and maximum, found {len(minima)} and {len(maxima)}."
            )
        for index, row in enumerate(self.covers):
            for above in row:
                if self.rank_of[above] != self.rank_of[index] + 1:
                    raise ValueError(
                        f"Cover {self.elements[index]} < {self.elements[above]} skips a rank."
                    )

    __hash__ = None  # type: ignore[assignment]

    @property
    def bottom(self) -> int:
        return self.rank_of.index(0)

    @property
    def top(self) -> int:
        return self.rank_of.index(self.rank)

    @property
    def rank(self) -> int:
        return max(self.rank_of)

    def index(self, element: NoncrossingPartition) -> int:
        try:
            return self.positions[element]
        except KeyError as error:
            raise ValueError(f"{element} is not an element of this poset.") from error

    @functools.cached_property
    def lower_covers(self) -> Tuple[Tuple[int, ...], ...]:
        below: List[List[int]] = [[] for _ in self.elements]
        for index, row in enumerate(self.covers):
            for above in row:
                below[above].append(index)
        return tuple(tuple(row) for row in below)

    @functools.cached_property
    def upsets(self) -> Tuple[int, ...]:
        """Bitmask of every element above (and including) each element."""
        masks = [0] * len(self.elements)
        for index in sorted(range(len(self.elements)), key=lambda i: -self.rank_of[i]):
            mask = 1 << index
            for above in self.covers[index]:
                mask |= masks[above]
            masks[index] = mask
        return tuple(masks)

    def leq(self, lower: int, upper: int) -> bool:
        return bool(self.upsets[lower] >> upper & 1)

    def below(self, index: int) -> List[int]:
        """Every element below (and including) `index`."""
        return [other for other in range(len(self.elements)) if self.leq(other, index)]

    def elements_of_rank(self, rank: int) -> List[int]:
        return [index for index, value in enumerate(self.rank_of) if value == rank]

    def cover_pairs(self) -> Iterator[Tuple[int, int]]:
        for index, row in enumerate(self.covers):
            for above in row:
                yield index, above

    def to_schema(self) -> PosetSchema:
        return PosetSchema(
            n=self.n,
            d=self.d,
            elements=[element.to_schema() for element in self.elements],
            covers=list(self.cover_pairs()),
        )

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"GradedPoset(n={self.n}, d={self.d}, elements={len(self)}, rank={self.rank})"


def _multiply(left: List[int], right: List[int]) -> List[int]:
    product = [0] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        for j, b in enumerate(right):
            product[i + j] += a * b
    return product


@attr.s(frozen=True)
class IntervalFactorization:
    """
    An interval as a product of smaller posets NC^d_m, one per size m.
    """

    d = attr.ib(type=int)
    sizes = attr.ib(type=Tuple[int, ...], converter=lambda sizes: tuple(sorted(sizes)))

    @sizes.validator
    def _check_sizes(self, _: "attr.Attribute[Tuple[int, ...]]", sizes: Tuple[int, ...]) -> None:
        for size in sizes:
            if size < 2 or (size - 1) % self.d:
                raise ValueError(f"Factor size {size} is not 1 modulo {self.d} or is trivial.")

    @property
    def rank(self) -> int:
        return sum((size - 1) // self.d for size in self.sizes)

    def cardinality(self) -> int:
        value = 1
        for size in self.sizes:
            value *= closed_form(const.CARDINALITY, self.d, k=(size - 1) // self.d)
        return value

    def rank_counts(self) -> List[int]:
        counts = [1]
        for size in self.sizes:
            k = (size - 1) // self.d
            factor = [closed_form(const.RANK_COUNT, self.d, i=k - j, j=j) for j in range(k + 1)]
            counts = _multiply(counts, factor)
        return counts
