"""
.. _Series:

Generating functions
====================

Partitions in NC^d_{dk+1} are weighted by their block sizes: a block of size
:math:`dm + 1` contributes :math:`a(m)`, a dual block of size :math:`dm + 1`
contributes :math:`a^*(m)`, and :math:`s`, :math:`t` mark the corank and the rank.
With :math:`A(x) = \\sum a(m) x^m` and :math:`A^*` alike, the series

.. math::

    C = A^*(x s C^{*d}), \\quad C^* = A(x t C^d)

determine the weighted sum over every NC^d_{dk+1} as :math:`[x^k] C C^*`.

.. ipython:: python

    from ncposet.types import TruncatedSeries
    from ncposet.series import solve_cc_star

    x = TruncatedSeries.variable("x", 4)
    geometric = (1 - x).reciprocal()
    c, c_star = solve_cc_star(geometric, geometric, 2, 4, s=1, t=1)
    [(c * c_star).coefficient(k) for k in range(5)]
"""
import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

import ncposet.constants as const
from ncposet.errors import VerificationError
from ncposet.formulas import (
    algebraic_coefficient,
    binomial,
    closed_form,
    generalized_binomial,
)
from ncposet.partitions import kreweras_dual
from ncposet.poset import d_indivisible_partitions
from ncposet.types.series import Scalar, TruncatedSeries

__all__ = [
    "algebraic_coefficient",
    "binomial",
    "check_cardinality_series",
    "closed_form",
    "fixed_point_coefficient",
    "generalized_binomial",
    "good_inversion_2",
    "lagrange_coefficient",
    "small_blocks_series",
    "solve_cc_star",
    "verify_speicher",
    "weighted_sum_b",
]


def _marker(name: str, value: Optional[Scalar], order: int) -> TruncatedSeries:
    if value is None:
        return TruncatedSeries.variable(name, order)
    return TruncatedSeries.constant(value, order)


def solve_cc_star(
    A: TruncatedSeries,
    A_star: TruncatedSeries,
    d: int,
    order: int,
    s: Optional[Scalar] = None,
    t: Optional[Scalar] = None,
) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """
    Solve C = A*(x·s·C*^d), C* = A(x·t·C^d) modulo x^(order + 1).

    Each round of the fixed-point iteration fixes one more x-degree, starting from
    C = C* = 1.

    :param A: Generating function of the block weights a(m).
    :type A: TruncatedSeries
    :param A_star: Generating function of the dual block weights a*(m).
    :type A_star: TruncatedSeries
    :param d: Block sizes are 1 modulo d.
    :type d: int
    :param order: Truncation order in x.
    :type order: int
    :param s: Value for s, left symbolic when None.
    :param t: Value for t, left symbolic when None.
    :return: The pair (C, C*).
    :rtype: Tuple[TruncatedSeries, TruncatedSeries]
    :raises ValueError: If a constant term is not 1 or d is not positive.
    """
    if d < 1:
        raise ValueError(f"d should be positive, got {d}.")
    for name, series in (("A", A), ("A*", A_star)):
        if series.constant_term() != 1 or not series.has_scalar_x0_part():
            raise ValueError(f"{name} should have constant term 1.")

    x = TruncatedSeries.variable(const.X, order)
    xs = x * _marker(const.S, s, order)
    xt = x * _marker(const.T, t, order)
    A, A_star = A.truncate(order), A_star.truncate(order)

    c = c_star = TruncatedSeries.constant(1, order)
    for _ in range(order + 1):
        c, c_star = A_star.compose(xs * c_star ** d), A.compose(xt * c ** d)
    return c, c_star


def _weights(values: Sequence[Scalar], k: int, name: str) -> List[Fraction]:
    if len(values) <= k:
        raise ValueError(f"{name} needs at least {k + 1} values, got {len(values)}.")
    if values[0] != 1:
        raise ValueError(f"{name}(0) should be 1, got {values[0]}.")
    return [Fraction(value) for value in values]


def weighted_sum_b(
    k: int,
    d: int,
    a: Sequence[Scalar],
    a_star: Sequence[Scalar],
    budget: Optional[int] = None,
) -> Dict[Tuple[int, int], Fraction]:
    """
    Σ wt(π) over NC^d_{dk+1} as a polynomial in s and t, keyed by (s, t) exponents.

    wt(π) = Π_B a((|B| − 1)/d) · Π_C′ a*((|C′| − 1)/d) · s^corank · t^rank.

    :raises ValueError: If a(0) or a*(0) is not 1 or a sequence is too short.
    :raises BudgetExceededError: If the poset would be too large.
    """
    if k < 0:
        raise ValueError(f"k should be nonnegative, got {k}.")
    weights, dual_weights = _weights(a, k, "a"), _weights(a_star, k, "a*")
    total: Dict[Tuple[int, int], Fraction] = {}
    for pi in d_indivisible_partitions(d * k + 1, d, budget=budget):
        dual = kreweras_dual(pi)
        value = Fraction(1)
        for block in pi.blocks:
            value *= weights[(len(block) - 1) // d]
        for block in dual.blocks:
            value *= dual_weights[(len(block) - 1) // d]
        key = ((len(pi) - 1) // d, (len(dual) - 1) // d)
        total[key] = total.get(key, Fraction(0)) + value
    return {key: value for key, value in total.items() if value}


def lagrange_coefficient(m: int, power: int, n: int) -> Fraction:
    """
    [z^n] G^power for G = z·G^m + 1, by iterating the equation.
    """
    if m < 1 or power < 1 or n < 0:
        raise ValueError(f"Expected m >= 1, power >= 1, n >= 0; got {m}, {power}, {n}.")
    z = TruncatedSeries.variable(const.X, n)
    g = TruncatedSeries.constant(1, n)
    for _ in range(n + 1):
        g = 1 + z * g ** m
    return (g ** power).coefficient(n)


def _check_kernel(g: TruncatedSeries, name: str) -> None:
    if any(monomial[0] for monomial in g.terms):
        raise ValueError(f"{name} should be a polynomial in s and t only.")
    if g.constant_term() == 0:
        raise ValueError(f"{name} should have a nonzero constant term.")


def good_inversion_2(
    g1: TruncatedSeries, g2: TruncatedSeries, m: int, n: int, k: int, ell: int
) -> Fraction:
    """
    [z^m w^n] f1^k f2^ℓ where f1 = z·g1(f1, f2) and f2 = w·g2(f1, f2).

    The kernels g1, g2 are polynomials in s, t standing for f1, f2. The coefficient is
    [s^(m−k) t^(n−ℓ)] g1^m g2^n · det(δ_ij − (u_j / g_i) ∂g_i/∂u_j). Rows of the
    determinant are scaled by g_i so only integer powers appear.

    .. ipython:: python

        from ncposet.types import TruncatedSeries
        from ncposet.series import good_inversion_2

        one = TruncatedSeries.constant(1, 0)
        good_inversion_2(one, one, 2, 1, 2, 1), good_inversion_2(one, one, 2, 1, 1, 1)

    :raises ValueError: If a kernel has a zero constant term or involves x.
    """
    _check_kernel(g1, "g1")
    _check_kernel(g2, "g2")
    if min(m, n, k, ell) < 0:
        raise ValueError(f"Exponents should be nonnegative, got {(m, n, k, ell)}.")
    if m < k or n < ell:
        return Fraction(0)
    order = (m - k) + (n - ell)
    first, second = g1.homogenize(order), g2.homogenize(order)

    first_power = first ** (m - 1)
    second_power = second ** (n - 1)
    top_left = first * first_power - first.euler(const.S) * first_power
    top_right = -(first.euler(const.T) * first_power)
    bottom_left = -(second.euler(const.S) * second_power)
    bottom_right = second * second_power - second.euler(const.T) * second_power

    determinant = top_left * bottom_right - top_right * bottom_left
    return determinant.coefficient(order, m - k, n - ell)


def fixed_point_coefficient(
    g1: TruncatedSeries, g2: TruncatedSeries, m: int, n: int, k: int, ell: int
) -> Fraction:
    """
    The same coefficient as :code:`good_inversion_2`, read off the iterated system
    f1 = x·s·g1(f1, f2), f2 = x·t·g2(f1, f2).
    """
    _check_kernel(g1, "g1")
    _check_kernel(g2, "g2")
    order = m + n
    x = TruncatedSeries.variable(const.X, order)
    xs = x * TruncatedSeries.variable(const.S, order)
    xt = x * TruncatedSeries.variable(const.T, order)
    f1 = f2 = TruncatedSeries(order)
    for _ in range(order + 1):
        f1, f2 = xs * g1.substitute(f1, f2), xt * g2.substitute(f1, f2)
    return (f1 ** k * f2 ** ell).coefficient(order, m, n)


def small_blocks_series(d: int, order: int) -> TruncatedSeries:
    """
    B = D·D* + D + D* + 1 where D = s·x·(1 + D*)^d and D* = t·x·(1 + D)^d.

    [x^k s^i t^j] B counts partitions of NC^d_{dk+1} with corank i and rank j whose
    blocks and dual blocks all have size 1 or d + 1.
    """
    if d < 1:
        raise ValueError(f"d should be positive, got {d}.")
    x = TruncatedSeries.variable(const.X, order)
    xs = x * TruncatedSeries.variable(const.S, order)
    xt = x * TruncatedSeries.variable(const.T, order)
    first = second = TruncatedSeries(order)
    for _ in range(order + 1):
        first, second = xs * (1 + second) ** d, xt * (1 + first) ** d
    return first * second + first + second + 1


def _random_weights(rng: random.Random, order: int) -> List[int]:
    return [1] + [rng.randint(-3, 3) for _ in range(order)]


def verify_speicher(
    d: int,
    order: int,
    sequences: Optional[Sequence[Sequence[Scalar]]] = None,
    seed: int = const.DEFAULT_SEED,
) -> Tuple[bool, List[Tuple[TruncatedSeries, TruncatedSeries]]]:
    """
    Check 1 + x·B^d = Ā(x·(1 + x·B^d)) where Ā = 1 + x·A^d and B = C·C* at s = t = 1,
    with the dual weights a*(m) = (−1)^m·C(−1/d, m).

    :param sequences: Block weights a(0..order) to try; three seeded random ones when None.
    :return: Whether every sequence satisfies the identity, with the (left, right) sides.
    :rtype: Tuple[bool, List[Tuple[TruncatedSeries, TruncatedSeries]]]
    """
    if d < 1 or order < 1:
        raise ValueError(f"Expected d >= 1 and order >= 1, got {d} and {order}.")
    if sequences is None:
        rng = random.Random(seed)
        sequences = [_random_weights(rng, order) for _ in range(3)]

    x = TruncatedSeries.variable(const.X, order)
    a_star = TruncatedSeries.from_sequence(
        [(-1) ** m * generalized_binomial(Fraction(-1, d), m) for m in range(order + 1)], order
    )
    holds = True
    witnesses = []
    for values in sequences:
        a = TruncatedSeries.from_sequence(values, order)
        c, c_star = solve_cc_star(a, a_star, d, order, s=1, t=1)
        b = c * c_star
        b_bar = 1 + x * b ** d
        a_bar = 1 + x * a ** d
        right = a_bar.compose(x * b_bar)
        if b_bar.terms != right.terms:
            logger.error(f"Identity fails for d={d} and a={list(values)}.")
            holds = False
        witnesses.append((b_bar, right))
    return holds, witnesses


def check_cardinality_series(d: int, order: int) -> None:
    """
    Compare [x^k] C·C* for a = a* = 1 against the cardinality formula.

    :raises VerificationError: On the first mismatch.
    """
    geometric = (1 - TruncatedSeries.variable(const.X, order)).reciprocal()
    c, c_star = solve_cc_star(geometric, geometric, d, order, s=1, t=1)
    product = c * c_star
    for k in range(order + 1):
        expected = closed_form(const.CARDINALITY, d, k=k)
        if product.coefficient(k) != expected:
            raise VerificationError(
                f"[x^{k}] C·C* = {product.coefficient(k)} but |NC^{d}_{d * k + 1}| = {expected}."
            )
