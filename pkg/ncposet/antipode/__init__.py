"""
.. _Antipode:

The antipode of NC^d_n
======================

Two independent computations of the antipode:

- the alternating chain sum :math:`\\sum (-1)^k [x_0, x_1] \\cdots [x_{k-1}, x_k]` over
  chains :math:`\\hat 0 = x_0 < \\dots < x_k = \\hat 1`, each interval replaced by its
  product of smaller posets;
- the cancellation-free sum :math:`\\sum_T (-1)^{|T|} \\prod_{E \\in T} [|E|]` over
  noncrossing hypertrees :math:`T` on :math:`[n]` with edge sizes :math:`1 \\pmod d`.

.. ipython:: python

    from ncposet.poset import build_poset
    from ncposet.antipode import antipode_schmitt, antipode_hypertrees

    antipode_schmitt(build_poset(5, 2)), antipode_hypertrees(5, 2)

Two edges of a hypertree cross when they share more than one vertex or four
distinct vertices alternate between them around the circle.
"""
import functools
import itertools
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

import ncposet.constants as const
from ncposet.errors import BudgetExceededError, EmptyPosetFamilyError
from ncposet.partitions import crosses, kreweras_dual
from ncposet.poset import count_chains, interval_factorization
from ncposet.types.hopf import Edge, HopfElement, Hypertree
from ncposet.types.partition import NoncrossingPartition
from ncposet.types.poset import GradedPoset

Forest = Tuple[Edge, ...]


def _refines(lower: NoncrossingPartition, upper: NoncrossingPartition) -> bool:
    return all(len({upper.block_of(element) for element in block}) == 1 for block in lower.blocks)


def phi(pi: NoncrossingPartition, sigma: NoncrossingPartition) -> List[Edge]:
    """
    For every dual block C′ of π, the γ labels of the blocks of π next to C′, grouped by
    the block of σ holding them. Groups of two or more become edges.

    :raises ValueError: Unless π < σ.
    """
    if pi.n != sigma.n or pi == sigma or not _refines(pi, sigma):
        raise ValueError(f"{pi} is not strictly below {sigma}.")
    dual = kreweras_dual(pi)
    edges = []
    for dual_block in dual.blocks:
        groups: Dict[int, List[int]] = {}
        for gamma in dual_block:
            groups.setdefault(sigma.block_of(gamma), []).append(gamma)
        edges.extend(tuple(group) for group in groups.values() if len(group) > 1)
    return sorted(edges)


def phi_chain(chain: Iterable[NoncrossingPartition]) -> Hypertree:
    """
    The union of φ over the steps of a chain from 0̂ to 1̂.

    :raises ValueError: If the union is not a hypertree.
    """
    partitions = list(chain)
    edges = [edge for lower, upper in zip(partitions, partitions[1:]) for edge in phi(lower, upper)]
    return Hypertree(partitions[0].n, edges)


def _edges_cross(first: Edge, second: Edge) -> bool:
    shared = set(first) & set(second)
    if len(shared) > 1:
        return True
    if not shared:
        return crosses(first, second)
    vertex = shared.pop()
    return crosses(first, [v for v in second if v != vertex]) or crosses(
        [v for v in first if v != vertex], second
    )


def is_noncrossing_hypertree(edges: Iterable[Sequence[int]], n: int, d: int = 1) -> bool:
    """
    Whether `edges` form a noncrossing hypertree on [n] with every edge size 1 modulo d.
    """
    try:
        tree = Hypertree(n, edges)
    except ValueError:
        return False
    if any((len(edge) - 1) % d for edge in tree.edges):
        return False
    return not any(_edges_cross(a, b) for a, b in itertools.combinations(tree.edges, 2))


def _shift(forest: Forest, offset: int) -> Forest:
    return tuple(tuple(vertex + offset for vertex in edge) for edge in forest)


@functools.lru_cache(maxsize=None)
def _trees(length: int, d: int) -> Tuple[Forest, ...]:
    """Noncrossing hypertrees on the vertices 0, …, length − 1."""
    if length == 1:
        return ((),)
    found = []
    for reach in range(1, length):
        for left in _spanning(reach + 1, d):
            for right in _trees(length - reach, d):
                found.append(left + _shift(right, reach))
    return tuple(found)


@functools.lru_cache(maxsize=None)
def _spanning(length: int, d: int) -> Tuple[Forest, ...]:
    """Hypertrees on 0, …, length − 1 whose edge through 0 ends at length − 1."""
    last = length - 1
    found = []
    for inner in range(last):
        if (inner + 1) % d:
            continue
        for middle in itertools.combinations(range(1, last), inner):
            edge = (0,) + middle + (last,)
            parts: List[Forest] = [()]
            for low, high in zip(edge, edge[1:]):
                parts = [part + _shift(gap, low) for part in parts for gap in _gaps(high - low + 1, d)]
            found.extend((edge,) + part for part in parts)
    return tuple(found)


@functools.lru_cache(maxsize=None)
def _gaps(length: int, d: int) -> Tuple[Forest, ...]:
    """Hypertrees hanging between two consecutive vertices 0 and length − 1 of one edge."""
    last = length - 1
    found = []
    for split in range(last):
        for left in _trees(split + 1, d):
            for right in _trees(last - split, d):
                found.append(left + _shift(right, split + 1))
    return tuple(found)


def enumerate_hypertrees(n: int, d: int = 1) -> Iterator[Hypertree]:
    """
    Every noncrossing hypertree on [n] with edge sizes 1 modulo d, once each.

    The edge through 1 that reaches farthest, say to c, splits the tree into a part on
    [1, c] and a part on [c, n]. Between consecutive vertices of that edge the remaining
    vertices hang from one end or the other.

    :raises EmptyPosetFamilyError: If n is not 1 modulo d.
    """
    if n < 1 or d < 1:
        raise ValueError(f"Expected n >= 1 and d >= 1, got n={n}, d={d}.")
    if (n - 1) % d:
        raise EmptyPosetFamilyError(n, d)
    for forest in _trees(n, d):
        yield Hypertree(n, _shift(forest, 1))


def brute_force_hypertrees(n: int, d: int = 1) -> List[Hypertree]:
    """Search every set of candidate edges, for cross-checking small n."""
    candidates = [
        edge
        for size in range(2, n + 1)
        if (size - 1) % d == 0
        for edge in itertools.combinations(range(1, n + 1), size)
    ]
    found = []
    for count in range(0, n):
        for edges in itertools.combinations(candidates, count):
            if sum(len(edge) - 1 for edge in edges) != n - 1:
                continue
            if is_noncrossing_hypertree(edges, n, d):
                found.append(Hypertree(n, edges))
    return found


def antipode_schmitt(P: GradedPoset, budget: Optional[int] = None) -> HopfElement:
    """
    Σ over chains 0̂ = x_0 < … < x_k = 1̂ of (−1)^k Π factor([x_{i−1}, x_i]).

    Summed from the top: S(1̂) = 1 and S(x) = −Σ_{y > x} factor([x, y])·S(y).

    :raises BudgetExceededError: If the poset has more chains than the chain budget.
    """
    budget = const.DEFAULT_CHAIN_BUDGET if budget is None else budget
    predicted = count_chains(P)
    if predicted > budget:
        raise BudgetExceededError(f"chains of {P!r}", predicted, budget)

    values: Dict[int, HopfElement] = {P.top: HopfElement.unit()}
    for index in sorted(range(len(P)), key=lambda i: -P.rank_of[i]):
        if index == P.top:
            continue
        total = HopfElement.zero()
        for above, value in values.items():
            if above != index and P.leq(index, above):
                sizes = interval_factorization(P, P.elements[index], P.elements[above]).sizes
                total = total - HopfElement.monomial(sizes) * value
        values[index] = total
    logger.debug(f"Summed {predicted} chains of {P!r}.")
    return values[P.bottom]


def antipode_hypertrees(n: int, d: int = 1) -> HopfElement:
    """Σ_T (−1)^{|T|} Π_{E ∈ T} [|E|] over noncrossing hypertrees."""
    total = HopfElement.zero()
    for tree in enumerate_hypertrees(n, d):
        total = total + HopfElement.monomial(tree.sizes(), (-1) ** len(tree))
    return total


def mobius_via_hypertrees(n: int, d: int = 1) -> int:
    """Σ_T (−1)^{|T|}, the Möbius value of NC^d_n."""
    return sum((-1) ** len(tree) for tree in enumerate_hypertrees(n, d))
