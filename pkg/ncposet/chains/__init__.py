"""
.. _Chains:

Maximal chains and d-parking functions
======================================

Label a cover :math:`\\pi \\lessdot \\sigma` merging blocks :math:`B_1, \\dots, B_{d+1}`
(ordered by minima) with :math:`\\lambda = \\max\\{i \\in B_1 : i < \\min B_2\\}`. Reading
the labels along a maximal chain of NC^d_{dk+1} gives a d-parking function, and
every d-parking function arises from exactly one chain.

.. ipython:: python

    from ncposet.types import DParkingFunction
    from ncposet.chains import parking_to_chain, chain_to_parking

    chain = parking_to_chain(DParkingFunction(2, (2, 1, 3, 1, 3)))
    [str(pi) for pi in chain]
    chain_to_parking(chain)

The labels :math:`\\lambda^* = |\\pi| - \\lambda` form an EL-labeling: in every
interval exactly one maximal chain has weakly increasing labels, and it is the
lexicographically least.
"""
import functools
from typing import Iterator, List, Optional, Sequence, Tuple

import attr
from loguru import logger
from sympy.utilities.iterables import multiset_permutations

from ncposet.errors import NotACoverError
from ncposet.poset import maximal_chains
from ncposet.types.parking import DParkingFunction, MaximalChain, is_d_parking, merged_blocks
from ncposet.types.partition import Block, NoncrossingPartition
from ncposet.types.poset import GradedPoset

__all__ = [
    "ElReport",
    "chain_labels",
    "chain_to_parking",
    "chains_of",
    "edge_label",
    "el_check",
    "enumerate_parking",
    "falling_chains",
    "falling_count",
    "is_d_parking",
    "is_falling",
    "parking_to_chain",
    "rising_chains",
    "singletons_before_last_max",
    "sorted_profiles",
    "star_label",
    "star_labels",
]


def edge_label(pi: NoncrossingPartition, sigma: NoncrossingPartition, d: int) -> int:
    """
    λ(π, σ) = max{i ∈ B_1 : i < min B_2} for the merged blocks B_1, …, B_{d+1}.

    :raises NotACoverError: If σ does not merge exactly d + 1 blocks of π into one.
    """
    if pi.n != sigma.n or len(pi) - len(sigma) != d:
        raise NotACoverError(f"{pi} and {sigma} do not differ by a merge of {d + 1} blocks.")
    merged = merged_blocks(pi, sigma)
    union = tuple(sorted(element for block in merged for element in block))
    if len(merged) != d + 1 or union not in sigma.blocks:
        raise NotACoverError(f"{sigma} does not join {d + 1} blocks of {pi}.")
    first, second = merged[0], merged[1]
    return max(element for element in first if element < second[0])


def star_label(pi: NoncrossingPartition, sigma: NoncrossingPartition, d: int) -> int:
    return len(pi) - edge_label(pi, sigma, d)


def chain_labels(chain: MaximalChain) -> Tuple[int, ...]:
    return tuple(edge_label(lower, upper, chain.d) for lower, upper in chain.steps())


def star_labels(chain: MaximalChain) -> Tuple[int, ...]:
    return tuple(star_label(lower, upper, chain.d) for lower, upper in chain.steps())


def chain_to_parking(chain: MaximalChain) -> DParkingFunction:
    """
    The labels along a maximal chain of NC^d_{dk+1}.

    :raises NotACoverError: If a step is not a cover.
    """
    return DParkingFunction(chain.d, chain_labels(chain))


def _chain_blocks(values: Tuple[int, ...], d: int) -> List[List[Block]]:
    if not values:
        return [[(1,)]]
    top = max(values)
    last = len(values) - 1 - values[::-1].index(top)
    shorter = _chain_blocks(values[:last] + values[last + 1 :], d)

    def shift(block: Block) -> Block:
        return tuple(element if element <= top else element + d for element in block)

    inserted = tuple(range(top + 1, top + d + 1))
    partitions: List[List[Block]] = []
    for blocks in shorter[: last + 1]:
        partitions.append([shift(block) for block in blocks] + [(element,) for element in inserted])
    for blocks in shorter[last:]:
        partitions.append(
            [shift(block) + (inserted if top in block else ()) for block in blocks]
        )
    return partitions


def parking_to_chain(pf: DParkingFunction) -> MaximalChain:
    """
    The maximal chain whose labels are `pf`.

    Take the largest value r at its last position s. The chain for the sequence without
    position s lives on d fewer elements; shift every element above r by d, add the
    singletons r + 1, …, r + d before step s and join them to the block of r at step s.

    .. ipython:: python

        from ncposet.types import DParkingFunction
        from ncposet.chains import parking_to_chain

        [str(pi) for pi in parking_to_chain(DParkingFunction(1, (2, 1)))]
    """
    n = pf.n
    return MaximalChain(
        pf.d, [NoncrossingPartition(n, blocks) for blocks in _chain_blocks(pf.values, pf.d)]
    )


def sorted_profiles(d: int, k: int) -> Iterator[Tuple[int, ...]]:
    """
    Weakly increasing sequences with b_i ≤ d·(i − 1) + 1, in lexicographic order.
    """
    if d < 1 or k < 0:
        raise ValueError(f"Expected d >= 1 and k >= 0, got d={d}, k={k}.")

    def extend(prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == k:
            yield prefix
            return
        low = prefix[-1] if prefix else 1
        for value in range(low, d * len(prefix) + 2):
            yield from extend(prefix + (value,))

    yield from extend(())


def enumerate_parking(d: int, k: int) -> Iterator[DParkingFunction]:
    """
    Every d-parking function of length k, once: sorted profiles, then their distinct
    rearrangements.
    """
    for profile in sorted_profiles(d, k):
        for values in multiset_permutations(list(profile)):
            yield DParkingFunction(d, values)


def is_falling(values: Sequence[int], d: int) -> bool:
    """a_i ≤ a_{i+1} + d − 1 at every step, so λ* strictly decreases."""
    return all(left <= right + d - 1 for left, right in zip(values, values[1:]))


def falling_count(d: int, k: int) -> int:
    return sum(1 for pf in enumerate_parking(d, k) if is_falling(pf.values, d))


def chains_of(P: GradedPoset, budget: Optional[int] = None) -> List[MaximalChain]:
    return [MaximalChain(P.d, chain) for chain in maximal_chains(P, budget=budget)]


def _is_rising(labels: Sequence[int]) -> bool:
    return all(left <= right for left, right in zip(labels, labels[1:]))


def rising_chains(P: GradedPoset, budget: Optional[int] = None) -> List[MaximalChain]:
    """Maximal chains with weakly increasing λ*."""
    return [chain for chain in chains_of(P, budget) if _is_rising(star_labels(chain))]


def falling_chains(P: GradedPoset, budget: Optional[int] = None) -> List[MaximalChain]:
    """Maximal chains with strictly decreasing λ*."""
    return [
        chain
        for chain in chains_of(P, budget)
        if all(left > right for left, right in zip(star_labels(chain), star_labels(chain)[1:]))
    ]


def singletons_before_last_max(chain: MaximalChain, pf: DParkingFunction) -> bool:
    """
    For r the largest value of `pf` at its last position s, π_{s−1} holds the
    singletons r + 1, …, r + d.
    """
    if not pf.values:
        return True
    top = max(pf.values)
    last = len(pf.values) - pf.values[::-1].index(top)
    before = chain.partitions[last - 1]
    return all((element,) in before.blocks for element in range(top + 1, top + pf.d + 1))


@attr.s(frozen=True)
class ElReport:
    intervals = attr.ib(type=int)
    violations = attr.ib(type=Tuple[Tuple[NoncrossingPartition, NoncrossingPartition], ...])
    rising_labels = attr.ib(type=Tuple[int, ...])

    @property
    def ok(self) -> bool:
        return not self.violations


def el_check(P: GradedPoset) -> ElReport:
    """
    Check every interval [π, σ] with π < σ for a unique rising maximal chain under λ*
    that is lexicographically smaller than every other maximal chain.

    :return: The number of intervals, the failing ones and the λ labels of the rising
        chain of the whole poset.
    """

    @functools.lru_cache(maxsize=None)
    def label(lower: int, upper: int) -> int:
        return star_label(P.elements[lower], P.elements[upper], P.d)

    def label_runs(start: int, end: int) -> Iterator[Tuple[int, ...]]:
        if start == end:
            yield ()
            return
        for above in P.covers[start]:
            if P.leq(above, end):
                for rest in label_runs(above, end):
                    yield (label(start, above),) + rest

    violations = []
    count = 0
    for lower in range(len(P)):
        for upper in range(len(P)):
            if lower == upper or not P.leq(lower, upper):
                continue
            count += 1
            runs = sorted(label_runs(lower, upper))
            rising = [run for run in runs if _is_rising(run)]
            if len(rising) != 1 or rising[0] != runs[0]:
                violations.append((P.elements[lower], P.elements[upper]))

    rising_top: Tuple[int, ...] = ()
    for chain in chains_of(P):
        if _is_rising(star_labels(chain)):
            rising_top = chain_labels(chain)
    if violations:
        logger.error(f"{len(violations)} of {count} intervals of {P!r} fail the EL property.")
    return ElReport(count, tuple(violations), rising_top)
