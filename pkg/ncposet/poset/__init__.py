"""
.. _Poset:

The poset NC^d_n
================

NC^d_n holds the noncrossing partitions of :math:`[n]` whose blocks and dual
blocks all have size :math:`1 \\pmod d`, ordered by refinement. It is nonempty
only for :math:`n \\equiv 1 \\pmod d`, graded of rank :math:`(n - 1)/d` with
:math:`\\mathrm{rank}(\\pi) = (n - |\\pi|)/d`, and every cover merges exactly
:math:`d + 1` blocks.

.. ipython:: python

    from ncposet.poset import build_poset, mobius, rank_counts

    poset = build_poset(5, 2)
    len(poset), rank_counts(poset), mobius(poset)

Elements come from plane trees whose vertex degrees are all :math:`1 \\pmod d`
(:code:`generator="trees"`) or from filtering every noncrossing partition of
:math:`[n]` (:code:`generator="filter"`).
"""
import itertools
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

import ncposet.constants as const
from ncposet.errors import BudgetExceededError, EmptyPosetFamilyError, VerificationError
from ncposet.formulas import closed_form
from ncposet.partitions import (
    intertwining_number,
    is_d_indivisible,
    kreweras_dual,
    noncrossing_partitions,
    simion_ullman_dual,
)
from ncposet.plane_trees import (
    ShapeConstraint,
    enumerate_shapes,
    reconstruct_labels,
    tree_to_partition,
)
from ncposet.types.partition import Block, NoncrossingPartition, canonical_blocks
from ncposet.types.poset import GradedPoset, IntervalFactorization

Chain = Tuple[NoncrossingPartition, ...]


def _check_family(n: int, d: int) -> int:
    if d < 1 or n < 1:
        raise ValueError(f"Expected n >= 1 and d >= 1, got n={n}, d={d}.")
    if (n - 1) % d:
        raise EmptyPosetFamilyError(n, d)
    return (n - 1) // d


def d_indivisible_partitions(
    n: int, d: int, budget: Optional[int] = None, generator: str = const.TREES
) -> Iterator[NoncrossingPartition]:
    """
    Every element of NC^d_n, in no particular order.

    :param n: Ground set size, 1 modulo d.
    :type n: int
    :param d: Block sizes are 1 modulo d.
    :type d: int
    :param budget: Largest admissible number of elements, the default budget when None.
    :type budget: Optional[int]
    :param generator: "trees" or "filter".
    :type generator: str
    :raises EmptyPosetFamilyError: If n is not 1 modulo d.
    :raises BudgetExceededError: If the family has more elements than the budget.
    """
    k = _check_family(n, d)
    budget = const.DEFAULT_ELEMENT_BUDGET if budget is None else budget
    predicted = closed_form(const.CARDINALITY, d, k=k)
    if predicted > budget:
        raise BudgetExceededError(f"NC^{d}_{n}", predicted, budget)

    if generator == const.TREES:
        for shape in enumerate_shapes(n + 1, ShapeConstraint.degree_1_mod_d(d)):
            yield tree_to_partition(reconstruct_labels(shape))
    elif generator == const.FILTER:
        for pi in noncrossing_partitions(n):
            if is_d_indivisible(pi, d):
                yield pi
    else:
        raise ValueError(f"Unknown generator {generator!r}, expected trees or filter.")


def _merges(pi: NoncrossingPartition, d: int) -> Iterator[Tuple[Block, ...]]:
    for chosen in itertools.combinations(range(len(pi)), d + 1):
        merged = tuple(sorted(itertools.chain.from_iterable(pi.blocks[i] for i in chosen)))
        rest = [block for index, block in enumerate(pi.blocks) if index not in chosen]
        yield canonical_blocks(rest + [merged])


def build_poset(
    n: int, d: int, budget: Optional[int] = None, generator: str = const.TREES
) -> GradedPoset:
    """
    Build NC^d_n with its cover relation.

    A cover of π merges d + 1 of its blocks, every such merge that lands in the element
    set is a cover.

    :raises EmptyPosetFamilyError: If n is not 1 modulo d.
    :raises BudgetExceededError: If the family has more elements than the budget.
    """
    elements = sorted(
        d_indivisible_partitions(n, d, budget=budget, generator=generator),
        key=lambda pi: (pi.rank(d), pi.blocks),
    )
    positions: Dict[Tuple[Block, ...], int] = {pi.blocks: index for index, pi in enumerate(elements)}
    covers = []
    for pi in elements:
        above = {positions[blocks] for blocks in _merges(pi, d) if blocks in positions}
        covers.append(sorted(above))
    logger.debug(f"Built NC^{d}_{n} with {len(elements)} elements.")
    return GradedPoset(n, d, elements, covers, [pi.rank(d) for pi in elements])


def mobius_function(P: GradedPoset) -> List[int]:
    """
    μ(0̂, x) for every element x, by μ(0̂, 0̂) = 1 and μ(0̂, x) = −Σ_{y < x} μ(0̂, y).
    """
    values = [0] * len(P)
    order = sorted(range(len(P)), key=lambda index: P.rank_of[index])
    bottom = P.bottom
    for index in order:
        if index == bottom:
            values[index] = 1
            continue
        values[index] = -sum(
            values[other] for other in order if other != index and P.leq(other, index)
        )
    return values


def _chains_by_length(P: GradedPoset) -> List[int]:
    """Number of chains 0̂ = x_0 < … < x_k = 1̂ for every length k."""
    order = sorted(range(len(P)), key=lambda index: P.rank_of[index])
    counts: Dict[int, List[int]] = {P.bottom: [1]}
    for index in order:
        if index == P.bottom:
            continue
        row = [0] * (P.rank_of[index] + 1)
        for other in order:
            if other != index and other in counts and P.leq(other, index):
                for length, value in enumerate(counts[other]):
                    row[length + 1] += value
        counts[index] = row
    return counts[P.top]


def hall_chain_sum(P: GradedPoset) -> int:
    """
    Σ_k (−1)^k c_k where c_k counts the chains 0̂ = x_0 < x_1 < … < x_k = 1̂.
    """
    return sum((-1) ** length * value for length, value in enumerate(_chains_by_length(P)))


def count_chains(P: GradedPoset) -> int:
    """All chains from 0̂ to 1̂, of any length."""
    return sum(_chains_by_length(P))


def mobius(P: GradedPoset) -> int:
    """
    μ(0̂, 1̂), by the recursion and by the chain sum.

    :raises VerificationError: If the two methods disagree.
    """
    recursive = mobius_function(P)[P.top]
    chains = hall_chain_sum(P)
    if recursive != chains:
        logger.error(f"Möbius values disagree on {P!r}: {recursive} against {chains}.")
        raise VerificationError(
            f"Recursive Möbius value {recursive} differs from the chain sum {chains}."
        )
    return recursive


def _ordered_pair(P: GradedPoset, pi: NoncrossingPartition, sigma: NoncrossingPartition) -> Tuple[int, int]:
    lower, upper = P.index(pi), P.index(sigma)
    if not P.leq(lower, upper):
        raise ValueError(f"{pi} is not below {sigma}.")
    return lower, upper


def interval(P: GradedPoset, pi: NoncrossingPartition, sigma: NoncrossingPartition) -> GradedPoset:
    """
    The induced subposet [π, σ], regraded so that π has rank 0.

    :raises ValueError: If π is not below σ.
    """
    lower, upper = _ordered_pair(P, pi, sigma)
    members = [
        index for index in range(len(P)) if P.leq(lower, index) and P.leq(index, upper)
    ]
    local = {index: position for position, index in enumerate(members)}
    base = P.rank_of[lower]
    return GradedPoset(
        P.n,
        P.d,
        [P.elements[index] for index in members],
        [[local[above] for above in P.covers[index] if above in local] for index in members],
        [P.rank_of[index] - base for index in members],
    )


def interval_factorization(
    P: GradedPoset, pi: NoncrossingPartition, sigma: NoncrossingPartition
) -> IntervalFactorization:
    """
    Factor sizes of [π, σ]: the intertwining numbers i(B, C′) > 1 for B a block of σ
    and C′ a block of the dual of π.

    :raises ValueError: If π is not below σ.
    :raises VerificationError: If an intertwining number is not 1 modulo d.
    """
    _ordered_pair(P, pi, sigma)
    dual = kreweras_dual(pi)
    sizes = [
        size
        for block in sigma.blocks
        for dual_block in dual.blocks
        for size in [intertwining_number(block, dual_block, P.n)]
        if size > 1
    ]
    try:
        return IntervalFactorization(P.d, sizes)
    except ValueError as error:
        logger.error(f"Intertwining numbers {sizes} of [{pi}, {sigma}] are not 1 mod {P.d}.")
        raise VerificationError(str(error)) from error


def rank_counts(P: GradedPoset) -> List[int]:
    counts = [0] * (P.rank + 1)
    for rank in P.rank_of:
        counts[rank] += 1
    return counts


def verify_factorization(
    P: GradedPoset, pi: NoncrossingPartition, sigma: NoncrossingPartition
) -> IntervalFactorization:
    """
    Compare [π, σ] with the product of its factors, by cardinality and rank counts.

    :raises VerificationError: On a mismatch.
    """
    factorization = interval_factorization(P, pi, sigma)
    sub = interval(P, pi, sigma)
    if len(sub) != factorization.cardinality() or rank_counts(sub) != factorization.rank_counts():
        logger.error(f"Interval [{pi}, {sigma}] does not match factors {factorization.sizes}.")
        raise VerificationError(
            f"[{pi}, {sigma}] has rank counts {rank_counts(sub)}, the factors"
            f" {factorization.sizes} give {factorization.rank_counts()}."
        )
    return factorization


def count_maximal_chains(P: GradedPoset) -> int:
    paths = [0] * len(P)
    for index in sorted(range(len(P)), key=lambda index: -P.rank_of[index]):
        paths[index] = 1 if index == P.top else sum(paths[above] for above in P.covers[index])
    return paths[P.bottom]


def maximal_chains(P: GradedPoset, budget: Optional[int] = None) -> List[Chain]:
    """
    Every saturated chain from 0̂ to 1̂.

    :raises BudgetExceededError: If there are more chains than the chain budget.
    """
    budget = const.DEFAULT_CHAIN_BUDGET if budget is None else budget
    predicted = count_maximal_chains(P)
    if predicted > budget:
        raise BudgetExceededError(f"maximal chains of {P!r}", predicted, budget)

    chains: List[Chain] = []

    def extend(path: List[int]) -> None:
        if path[-1] == P.top:
            chains.append(tuple(P.elements[index] for index in path))
            return
        for above in P.covers[path[-1]]:
            extend(path + [above])

    extend([P.bottom])
    return chains


def simion_ullman_map(P: GradedPoset) -> List[int]:
    """
    The index of the Simion–Ullman dual of every element.

    :raises VerificationError: If a dual falls outside the poset.
    """
    try:
        return [P.index(simion_ullman_dual(pi)) for pi in P.elements]
    except ValueError as error:
        raise VerificationError(f"The self-duality leaves {P!r}.") from error


def is_order_reversing(P: GradedPoset, mapping: Sequence[int]) -> bool:
    if sorted(mapping) != list(range(len(P))):
        return False
    return all(mapping[index] in P.covers[mapping[above]] for index, above in P.cover_pairs())


def coatoms(P: GradedPoset) -> List[NoncrossingPartition]:
    return [P.elements[index] for index in P.lower_covers[P.top]]
