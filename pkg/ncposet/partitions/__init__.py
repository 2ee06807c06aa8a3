"""
.. _Partitions:

Noncrossing partitions, duals and adjacency
===========================================

Operations on :ref:`NoncrossingPartition <NoncrossingPartition>` values.

The Kreweras dual of :math:`\\pi` is the coarsest partition :math:`\\pi'` of
:math:`\\{1', \\dots, n'\\}` such that :math:`\\pi \\cup \\pi'` is noncrossing on the
interleaved cycle :math:`1 < 1' < 2 < 2' < \\dots < n < n'`. With
:math:`p` the permutation sending each element to the next one of its block
(cyclically), the dual blocks are the cycles of :math:`i' \\mapsto (p^{-1}(i + 1))'`.

.. ipython:: python

    from ncposet.types import NoncrossingPartition
    from ncposet.partitions import kreweras_dual, is_d_indivisible

    pi = NoncrossingPartition.parse("1|2,9,10|3|4,5,6,7,8|11")
    str(kreweras_dual(pi))
    is_d_indivisible(pi, 2)
"""
import itertools
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx

from ncposet.types.partition import (
    Block,
    DualAdjacency,
    NoncrossingPartition,
    canonical_blocks,
    first_crossing,
    index_blocks,
)


def is_noncrossing(blocks: Sequence[Sequence[int]], n: int) -> bool:
    """
    Check blocks of a set partition of [n] for the crossing pattern.

    :param blocks: A candidate partition of [n].
    :type blocks: Sequence[Sequence[int]]
    :param n: Size of the ground set.
    :type n: int
    :return: True if no two blocks cross.
    :rtype: bool
    :raises ValueError: If blocks are not a set partition of [n].
    """
    canonical = canonical_blocks(blocks)
    owner = index_blocks(n, canonical)
    left, _ = first_crossing(owner, canonical)
    return left == -1


def crosses(first: Sequence[int], second: Sequence[int]) -> bool:
    """
    True if disjoint blocks hold i < j < k < l with i, k in one and j, l in the other.
    """
    tags = sorted([(element, 0) for element in first] + [(element, 1) for element in second])
    changes = sum(1 for (_, a), (_, b) in zip(tags, tags[1:]) if a != b)
    return changes >= 3


def successor(pi: NoncrossingPartition) -> List[int]:
    """
    The cyclic permutation of each block, 1-based, index 0 unused.
    """
    following = [0] * (pi.n + 1)
    for block in pi.blocks:
        for position, element in enumerate(block):
            following[element] = block[(position + 1) % len(block)]
    return following


def kreweras_dual(pi: NoncrossingPartition) -> NoncrossingPartition:
    """
    The Kreweras dual, with primes dropped.

    :param pi: A noncrossing partition.
    :type pi: NoncrossingPartition
    :return: The coarsest dual partition, :math:`|\\pi| + |\\pi'| = n + 1`.
    :rtype: NoncrossingPartition
    """
    n = pi.n
    following = successor(pi)
    preceding = [0] * (n + 1)
    for element in range(1, n + 1):
        preceding[following[element]] = element

    seen = [False] * (n + 1)
    blocks: List[Tuple[int, ...]] = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        element = start
        while not seen[element]:
            seen[element] = True
            cycle.append(element)
            element = preceding[element % n + 1]
        blocks.append(tuple(cycle))
    return NoncrossingPartition(n, blocks)


def reflect(pi: NoncrossingPartition) -> NoncrossingPartition:
    n = pi.n
    return NoncrossingPartition(n, [[n + 1 - element for element in block] for block in pi.blocks])


def simion_ullman_dual(pi: NoncrossingPartition) -> NoncrossingPartition:
    """
    The dual read in the order 1 < n′ < 2 < (n−1)′ < … < n < 1′.

    The slot after i is (n + 1 − i)′ here where the Kreweras dual has i′, so this is
    the Kreweras dual reflected by k ↦ n + 1 − k. It is an order-reversing involution.
    """
    return reflect(kreweras_dual(pi))


def adjacencies(pi: NoncrossingPartition) -> List[DualAdjacency]:
    """
    All (block, dual block) adjacencies with their γ labels.

    Element i sits between i and i′ on the interleaved cycle, so every i gives exactly
    one adjacency: the block of i touches the dual block of i′, with γ = i. The result
    is sorted by γ and has exactly n entries.
    """
    dual = kreweras_dual(pi)
    return [
        DualAdjacency(
            block_index=pi.block_of(element),
            dual_block_index=dual.block_of(element),
            gamma=element,
        )
        for element in range(1, pi.n + 1)
    ]


def adjacency_graph(pi: NoncrossingPartition) -> nx.MultiGraph:
    """
    Bipartite multigraph of blocks ("B", i) and dual blocks ("W", j), one edge per γ.
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(("B", index) for index in range(len(pi)))
    graph.add_nodes_from(("W", index) for index in range(pi.n + 1 - len(pi)))
    for adjacency in adjacencies(pi):
        graph.add_edge(
            ("B", adjacency.block_index),
            ("W", adjacency.dual_block_index),
            gamma=adjacency.gamma,
        )
    return graph


def is_d_indivisible(pi: NoncrossingPartition, d: int) -> bool:
    """
    Every block of π and of its Kreweras dual has size 1 modulo d.

    :raises ValueError: If d is not positive.
    """
    if d < 1:
        raise ValueError(f"d should be positive, got {d}.")
    if any((len(block) - 1) % d for block in pi.blocks):
        return False
    return not any((len(block) - 1) % d for block in kreweras_dual(pi).blocks)


def is_d_indivisible_by_gaps(pi: NoncrossingPartition, d: int) -> bool:
    """
    Gap characterization: n ≡ 1 (mod d) and, for every nonsingleton block, the number
    of elements strictly between two cyclically consecutive members is divisible by d.
    """
    if d < 1:
        raise ValueError(f"d should be positive, got {d}.")
    n = pi.n
    if (n - 1) % d:
        return False
    for block in pi.blocks:
        if len(block) == 1:
            continue
        for position, element in enumerate(block):
            following = block[(position + 1) % len(block)]
            gap = (following - element - 1) % n
            if gap % d:
                return False
    return True


def intertwining_number(block: Sequence[int], dual_block: Sequence[int], n: int) -> int:
    """
    Count transitions from `block` to `dual_block` reading their union on the cycle
    1 < 1′ < 2 < … < n < n′. Dual elements are given unprimed.

    .. ipython:: python

        from ncposet.partitions import intertwining_number

        intertwining_number([1, 3], [1, 3], 4)
    """
    if not block or not dual_block:
        return 0
    marks: Dict[int, int] = {}
    for element in block:
        marks[2 * element - 1] = 0
    for element in dual_block:
        marks[2 * element] = 1
    sequence = [marks[position] for position in sorted(marks)]
    return sum(
        1
        for position, mark in enumerate(sequence)
        if mark == 0 and sequence[(position + 1) % len(sequence)] == 1
    )


def _noncrossing_blocks(elements: Tuple[int, ...]) -> Iterator[Tuple[Block, ...]]:
    if not elements:
        yield ()
        return
    head, rest = elements[0], elements[1:]
    for size in range(len(rest) + 1):
        for chosen in itertools.combinations(range(len(rest)), size):
            block = (head,) + tuple(rest[position] for position in chosen)
            bounds = (-1,) + chosen + (len(rest),)
            gaps = [rest[low + 1 : high] for low, high in zip(bounds, bounds[1:])]
            for pieces in itertools.product(*[list(_noncrossing_blocks(gap)) for gap in gaps]):
                yield (block,) + tuple(itertools.chain.from_iterable(pieces))


def noncrossing_partitions(n: int) -> Iterator[NoncrossingPartition]:
    """
    Every noncrossing partition of [n], built from the block of the smallest element and
    the independent gaps it leaves.
    """
    if n < 1:
        raise ValueError(f"Ground set size should be positive, got {n}.")
    for blocks in _noncrossing_blocks(tuple(range(1, n + 1))):
        yield NoncrossingPartition(n, blocks)
