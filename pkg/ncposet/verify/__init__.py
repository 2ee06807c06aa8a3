"""
.. _Verify:

Brute-force oracles and the invariant suite
===========================================

:code:`brute_force_count` counts by building NC^d_{dk+1} and filtering its
elements, the independent side of every closed form in :ref:`Formulas <Formulas>`.

:code:`run_suite` checks one poset NC^d_n against every identity the package knows:
counts, Möbius values, self-duality, interval factorization, the tree and chain
bijections, the EL-labeling, parking trees, the antipode and the series engine.

.. ipython:: python

    from ncposet.verify import brute_force_count, run_suite

    brute_force_count("small_blocks", 2, k=2)
    [str(result) for result in run_suite(2, 5)][:3]
"""
import random
from typing import Callable, Iterable, List, Optional, Tuple

import attr
from loguru import logger
from tqdm import tqdm

import ncposet.constants as const
from ncposet.antipode import antipode_hypertrees, antipode_schmitt, mobius_via_hypertrees
from ncposet.chains import (
    chain_to_parking,
    chains_of,
    el_check,
    enumerate_parking,
    falling_chains,
    falling_count,
    parking_to_chain,
)
from ncposet.errors import BudgetExceededError, VerificationError
from ncposet.formulas import KINDS, closed_form
from ncposet.parking_trees import (
    enumerate_parking_trees,
    parking_to_tree,
    tree_to_chain,
    tree_to_parking,
)
from ncposet.partitions import kreweras_dual
from ncposet.plane_trees import has_degrees_1_mod_d, label_violations, partition_to_tree, tree_to_partition
from ncposet.poset import (
    build_poset,
    coatoms,
    d_indivisible_partitions,
    is_order_reversing,
    mobius,
    rank_counts,
    simion_ullman_map,
    verify_factorization,
)
from ncposet.series import (
    check_cardinality_series,
    fixed_point_coefficient,
    good_inversion_2,
    small_blocks_series,
    solve_cc_star,
    verify_speicher,
    weighted_sum_b,
)
from ncposet.types.partition import NoncrossingPartition
from ncposet.types.poset import GradedPoset
from ncposet.types.series import TruncatedSeries

Check = Callable[[], str]


def _is_small(pi: NoncrossingPartition, d: int) -> bool:
    sizes = pi.sizes() + kreweras_dual(pi).sizes()
    return all(size in (1, d + 1) for size in sizes)


def brute_force_count(
    kind: str,
    d: int,
    k: Optional[int] = None,
    i: Optional[int] = None,
    j: Optional[int] = None,
    budget: Optional[int] = None,
) -> int:
    """
    Count what :code:`closed_form(kind, d, ...)` predicts by building the poset.

    :param kind: A closed-form kind.
    :type kind: str
    :param d: Block sizes are 1 modulo d.
    :type d: int
    :param k: The rank of the poset; rank kinds may pass i and j instead.
    :type k: Optional[int]
    :raises ValueError: On an unknown kind or missing parameters.
    :raises BudgetExceededError: If the poset would be too large.
    """
    if kind not in KINDS:
        raise ValueError(f"Unknown closed-form kind {kind!r}, expected one of {KINDS}.")
    if kind in const.RANK_KINDS:
        if i is None or j is None:
            raise ValueError(f"{kind} needs both the corank i and the rank j.")
        if k is not None and k != i + j:
            raise ValueError(f"Expected i + j = k, got {i} + {j} != {k}.")
        k = i + j
    if k is None or k < 0:
        raise ValueError(f"{kind} needs a nonnegative k, got {k}.")

    poset = build_poset(d * k + 1, d, budget=budget)
    if kind == const.MOBIUS:
        return mobius(poset)
    if kind == const.FALLING_CHAINS:
        return len(falling_chains(poset))

    def wanted(pi: NoncrossingPartition) -> bool:
        if kind in (const.SINGLETON, const.SINGLETON_RANK, const.SMALL_BLOCKS_SINGLETON):
            if not pi.has_singleton_one():
                return False
        if kind in (const.SMALL_BLOCKS, const.SMALL_BLOCKS_SINGLETON, const.SMALL_BLOCKS_RANK):
            if not _is_small(pi, d):
                return False
        if kind in const.RANK_KINDS:
            return pi.rank(d) == j
        return True

    return sum(1 for pi in poset.elements if wanted(pi))


def random_kernel(rng: random.Random, degree: int) -> TruncatedSeries:
    """
    A polynomial in s and t with constant term 1 and small integer coefficients.
    """
    terms = {(0, s, t): rng.randint(-2, 2) for s in range(degree + 1) for t in range(degree + 1 - s)}
    terms[(0, 0, 0)] = 1
    return TruncatedSeries(0, terms)


@attr.s(frozen=True)
class CheckResult:
    """
    Outcome of one check. A skipped check did not run and does not count as passing.
    """

    name = attr.ib(type=str)
    status = attr.ib(type=str, validator=attr.validators.in_(const.CHECK_STATUSES))
    detail = attr.ib(type=str, default="")

    @property
    def ok(self) -> bool:
        return self.status == const.CHECK_OK

    @property
    def skipped(self) -> bool:
        return self.status == const.CHECK_SKIP

    def __str__(self) -> str:
        return f"{self.name}: {self.status} {self.detail}".rstrip()


def _expect(ok: bool, detail: str) -> str:
    if not ok:
        raise VerificationError(detail)
    return detail


class _Suite:
    """
    The checks for one poset, each returning a short detail or raising
    :code:`VerificationError`.
    """

    def __init__(
        self, poset: GradedPoset, seed: int, budget: Optional[int], chain_budget: Optional[int]
    ) -> None:
        self.poset = poset
        self.n = poset.n
        self.d = poset.d
        self.k = poset.rank
        self.seed = seed
        self.budget = const.DEFAULT_ELEMENT_BUDGET if budget is None else budget
        self.chain_budget = chain_budget

    def checks(self) -> List[Tuple[str, Check]]:
        return [
            ("cardinality", self.cardinality),
            ("generators", self.generators),
            ("rank_counts", self.rank_counts),
            ("mobius", self.mobius),
            ("self_duality", self.self_duality),
            ("coatoms", self.coatoms),
            ("factorization", self.factorization),
            ("plane_trees", self.plane_trees),
            ("chains", self.chains),
            ("el_labeling", self.el_labeling),
            ("falling_chains", self.falling_chains),
            ("parking_trees", self.parking_trees),
            ("antipode", self.antipode),
            ("cardinality_series", self.cardinality_series),
            ("small_blocks_series", self.small_blocks_series),
            ("weighted_sum", self.weighted_sum),
            ("speicher", self.speicher),
            ("good_inversion", self.good_inversion),
        ]

    def cardinality(self) -> str:
        expected = closed_form(const.CARDINALITY, self.d, k=self.k)
        return _expect(len(self.poset) == expected, f"{len(self.poset)} elements, formula {expected}")

    def generators(self) -> str:
        # filtering walks all of NC_n
        scanned = closed_form(const.CARDINALITY, 1, k=self.n - 1)
        if scanned > self.budget:
            raise BudgetExceededError(f"NC_{self.n}", scanned, self.budget)
        filtered = set(d_indivisible_partitions(self.n, self.d, generator=const.FILTER))
        return _expect(filtered == set(self.poset.elements), f"{len(filtered)} filtered elements")

    def rank_counts(self) -> str:
        found = rank_counts(self.poset)
        expected = [
            closed_form(const.RANK_COUNT, self.d, i=self.k - rank, j=rank) for rank in range(self.k + 1)
        ]
        return _expect(found == expected, f"{found}, formula {expected}")

    def mobius(self) -> str:
        value = mobius(self.poset)
        expected = closed_form(const.MOBIUS, self.d, k=self.k)
        return _expect(value == expected, f"mu={value}, formula {expected}")

    def self_duality(self) -> str:
        mapping = simion_ullman_map(self.poset)
        involution = all(mapping[mapping[index]] == index for index in range(len(mapping)))
        _expect(involution, "the dual map is not an involution")
        return _expect(is_order_reversing(self.poset, mapping), "order-reversing involution")

    def coatoms(self) -> str:
        found = coatoms(self.poset)
        _expect(all(len(pi) == self.d + 1 for pi in found), f"a coatom without {self.d + 1} blocks")
        merges = all(
            len(self.poset.elements[lower]) - len(self.poset.elements[upper]) == self.d
            for lower, upper in self.poset.cover_pairs()
        )
        return _expect(merges, f"{len(found)} coatoms, every cover merges {self.d + 1} blocks")

    def factorization(self) -> str:
        count = 0
        for lower in range(len(self.poset)):
            for upper in range(len(self.poset)):
                if lower != upper and self.poset.leq(lower, upper):
                    verify_factorization(self.poset, self.poset.elements[lower], self.poset.elements[upper])
                    count += 1
        return f"{count} intervals"

    def plane_trees(self) -> str:
        for pi in self.poset.elements:
            tree = partition_to_tree(pi)
            _expect(not label_violations(tree), f"{pi} gives a tree violating {label_violations(tree)}")
            _expect(tree_to_partition(tree) == pi, f"{pi} does not survive the tree round trip")
            _expect(has_degrees_1_mod_d(tree, self.d), f"the tree of {pi} has a bad degree")
        return f"{len(self.poset)} trees"

    def chains(self) -> str:
        found = chains_of(self.poset, self.chain_budget)
        expected = (self.d * self.k + 1) ** (self.k - 1) if self.k else 1
        _expect(len(found) == expected, f"{len(found)} chains, expected {expected}")
        parking = set()
        for chain in found:
            pf = chain_to_parking(chain)
            _expect(parking_to_chain(pf) == chain, f"{pf} does not return to its chain")
            parking.add(pf)
        total = sum(1 for _ in enumerate_parking(self.d, self.k))
        return _expect(len(parking) == total == expected, f"{total} parking functions")

    def el_labeling(self) -> str:
        report = el_check(self.poset)
        return _expect(report.ok, f"{report.intervals} intervals, {len(report.violations)} failing")

    def falling_chains(self) -> str:
        found = len(falling_chains(self.poset, self.chain_budget))
        expected = closed_form(const.FALLING_CHAINS, self.d, k=self.k)
        _expect(found == expected, f"{found} falling chains, formula {expected}")
        return _expect(falling_count(self.d, self.k) == expected, f"{found} falling chains")

    def parking_trees(self) -> str:
        count = 0
        for pf in enumerate_parking(self.d, self.k):
            tree = parking_to_tree(pf)
            _expect(tree_to_parking(tree) == pf, f"{pf} does not survive the tree round trip")
            _expect(tree_to_chain(tree) == parking_to_chain(pf), f"the tree of {pf} walks another chain")
            count += 1
        trees = sum(1 for _ in enumerate_parking_trees(self.d, self.k))
        return _expect(trees == count, f"{count} parking trees")

    def antipode(self) -> str:
        schmitt = antipode_schmitt(self.poset, self.chain_budget)
        hypertrees = antipode_hypertrees(self.n, self.d)
        _expect(schmitt == hypertrees, f"chain sum {schmitt!r}, hypertrees {hypertrees!r}")
        value = mobius_via_hypertrees(self.n, self.d)
        _expect(value == hypertrees.evaluate(lambda _: 1) == mobius(self.poset), f"signed count {value}")
        return f"{hypertrees!r}"

    def cardinality_series(self) -> str:
        check_cardinality_series(self.d, self.k)
        return f"through x^{self.k}"

    def small_blocks_series(self) -> str:
        series = small_blocks_series(self.d, self.k)
        for rank in range(self.k + 1):
            i, j = self.k - rank, rank
            expected = closed_form(const.SMALL_BLOCKS_RANK, self.d, i=i, j=j)
            _expect(series.coefficient(self.k, i, j) == expected, f"[s^{i} t^{j}] differs from {expected}")
        return f"corank and rank through {self.k}"

    def weighted_sum(self) -> str:
        rng = random.Random(self.seed)
        a = [1] + [rng.randint(-3, 3) for _ in range(self.k)]
        a_star = [1] + [rng.randint(-3, 3) for _ in range(self.k)]
        c, c_star = solve_cc_star(
            TruncatedSeries.from_sequence(a, self.k), TruncatedSeries.from_sequence(a_star, self.k), self.d, self.k
        )
        series = (c * c_star).x_coefficient(self.k)
        brute = weighted_sum_b(self.k, self.d, a, a_star)
        return _expect(series == brute, f"a={a}, a*={a_star}")

    def speicher(self) -> str:
        order = max(self.k, 1)
        holds, _ = verify_speicher(self.d, order, seed=self.seed)
        return _expect(holds, f"modulo x^{order + 1}")

    def good_inversion(self) -> str:
        rng = random.Random(self.seed)
        g1, g2 = random_kernel(rng, 2), random_kernel(rng, 2)
        for m, n, k, ell in ((2, 1, 1, 1), (2, 2, 1, 0), (3, 1, 2, 1)):
            determinant = good_inversion_2(g1, g2, m, n, k, ell)
            direct = fixed_point_coefficient(g1, g2, m, n, k, ell)
            _expect(determinant == direct, f"[z^{m} w^{n}] f1^{k} f2^{ell}: {determinant} against {direct}")
        return "determinant matches the fixed point"


def _run(name: str, check: Check) -> CheckResult:
    try:
        return CheckResult(name, const.CHECK_OK, check())
    except VerificationError as error:
        logger.error(f"{name} failed: {error}")
        return CheckResult(name, const.CHECK_FAIL, str(error))
    except BudgetExceededError as error:
        logger.warning(f"{name} skipped: {error}")
        return CheckResult(name, const.CHECK_SKIP, f"over budget, {error.predicted} > {error.budget}")
    except (ValueError, TypeError, ArithmeticError) as error:
        logger.error(f"{name} raised {type(error).__name__}: {error}")
        return CheckResult(name, const.CHECK_FAIL, f"{type(error).__name__}: {error}")


def run_suite(
    d: int,
    n: int,
    seed: int = const.DEFAULT_SEED,
    budget: Optional[int] = None,
    chain_budget: Optional[int] = None,
    progress: bool = False,
) -> List[CheckResult]:
    """
    Run every check on NC^d_n.

    :param budget: Element budget for building the poset.
    :param chain_budget: Chain budget for chain enumerations.
    :return: One result per check. Checks over a budget are skipped, not passed.
    :param progress: Show a progress bar on stderr.
    :raises EmptyPosetFamilyError: If n is not 1 modulo d.
    :raises BudgetExceededError: If the poset itself is over budget.
    """
    suite = _Suite(build_poset(n, d, budget=budget), seed, budget, chain_budget)
    checks: Iterable[Tuple[str, Check]] = suite.checks()
    if progress:
        checks = tqdm(checks, desc=f"NC^{d}_{n}", leave=False)
    results = [_run(name, check) for name, check in checks]
    logger.debug(f"{sum(result.ok for result in results)} of {len(results)} checks passed on NC^{d}_{n}.")
    return results
