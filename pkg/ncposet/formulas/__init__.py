"""
.. _Formulas:

Closed-form counts
==================

Every count here is an exact integer obtained from a ratio of binomials. The
division is carried out on :code:`Fraction` values and integrality is checked,
a fractional result raises :code:`VerificationError`.

.. ipython:: python

    from ncposet.formulas import closed_form

    closed_form("cardinality", 2, k=2)
    closed_form("mobius", 1, k=3)
    closed_form("rank_count", 2, i=1, j=1)

Rank kinds take the corank :code:`i` and the rank :code:`j` with :code:`i + j = k`.
"""
import math
from fractions import Fraction
from typing import Optional, Tuple

import ncposet.constants as const
from ncposet.errors import VerificationError

KINDS = (
    const.CARDINALITY,
    const.RANK_COUNT,
    const.MOBIUS,
    const.SINGLETON,
    const.SINGLETON_RANK,
    const.SMALL_BLOCKS,
    const.SMALL_BLOCKS_SINGLETON,
    const.SMALL_BLOCKS_RANK,
    const.FALLING_CHAINS,
)


def binomial(top: int, bottom: int) -> int:
    """
    Binomial coefficient extended to negative `top` by C(−a, k) = (−1)^k C(a + k − 1, k).
    """
    if bottom < 0:
        return 0
    if top >= 0:
        return math.comb(top, bottom)
    return (-1) ** bottom * math.comb(bottom - top - 1, bottom)


def generalized_binomial(top: Fraction, bottom: int) -> Fraction:
    """
    C(r, k) for rational r as the falling factorial r(r−1)…(r−k+1) over k!.
    """
    if bottom < 0:
        return Fraction(0)
    value = Fraction(1)
    for step in range(bottom):
        value *= Fraction(top) - step
    return value / math.factorial(bottom)


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise VerificationError(f"{what} evaluated to the non-integer {value}.")
    return value.numerator


def algebraic_coefficient(m: int, power: int, n: int) -> int:
    """
    [z^n] G(z)^ℓ for G = z·G^m + 1, that is ℓ/(mn + ℓ)·C(mn + ℓ, n).

    :param m: Exponent of the functional equation, at least 1.
    :type m: int
    :param power: The power ℓ, at least 1.
    :type power: int
    :param n: Coefficient index, at least 0.
    :type n: int
    :rtype: int
    :raises ValueError: On parameters out of range.
    """
    if m < 1 or power < 1 or n < 0:
        raise ValueError(f"Expected m >= 1, power >= 1, n >= 0; got {m}, {power}, {n}.")
    value = Fraction(power, m * n + power) * math.comb(m * n + power, n)
    return _exact(value, f"algebraic_coefficient({m}, {power}, {n})")


def _rank_parameters(
    kind: str, k: Optional[int], i: Optional[int], j: Optional[int]
) -> Tuple[int, int]:
    if i is None or j is None:
        raise ValueError(f"{kind} needs both the corank i and the rank j.")
    if i < 0 or j < 0:
        raise ValueError(f"Corank and rank should be nonnegative, got i={i}, j={j}.")
    if k is not None and k != i + j:
        raise ValueError(f"Expected i + j = k, got {i} + {j} != {k}.")
    return i, j


def closed_form(
    kind: str,
    d: int,
    k: Optional[int] = None,
    i: Optional[int] = None,
    j: Optional[int] = None,
) -> int:
    """
    Evaluate a closed-form count for NC^d_{dk+1}.

    - cardinality: 2/(dk+2)·C(dk+k+1, k)
    - rank_count: (dk+1)/((i+dj+1)(di+j+1))·C(i+dj+1, i)·C(di+j+1, j)
    - mobius: (−1)^k·C(2dk, k)/(2dk−k+1)
    - singleton, partitions holding the block {1}: C(dk+k, k)/(dk+1)
    - singleton_rank: C(i+dj, i)·C(di+j−1, j)/(dj+1)
    - small_blocks, all block and dual block sizes in {1, d+1}: 2/(dk+2)·C(dk+2, k)
    - small_blocks_singleton: C(dk+1, k)/(dk+1)
    - small_blocks_rank: (dk+1)/((dj+1)(di+1))·C(dj+1, i)·C(di+1, j)
    - falling_chains: C(2dk, k)/(2dk−k+1)

    :raises ValueError: On an unknown kind or parameters out of range.
    """
    if kind not in KINDS:
        raise ValueError(f"Unknown closed-form kind {kind!r}, expected one of {KINDS}.")
    if d < 1:
        raise ValueError(f"d should be positive, got {d}.")
    if kind in const.RANK_KINDS:
        i, j = _rank_parameters(kind, k, i, j)
        k = i + j
        if kind == const.RANK_COUNT:
            value = (
                Fraction(d * k + 1, (i + d * j + 1) * (d * i + j + 1))
                * binomial(i + d * j + 1, i)
                * binomial(d * i + j + 1, j)
            )
        elif kind == const.SINGLETON_RANK:
            value = Fraction(binomial(i + d * j, i) * binomial(d * i + j - 1, j), d * j + 1)
        else:
            value = (
                Fraction(d * k + 1, (d * j + 1) * (d * i + 1))
                * binomial(d * j + 1, i)
                * binomial(d * i + 1, j)
            )
        return _exact(value, f"{kind}(d={d}, i={i}, j={j})")

    if k is None or k < 0:
        raise ValueError(f"{kind} needs a nonnegative k, got {k}.")
    if kind == const.CARDINALITY:
        value = Fraction(2, d * k + 2) * binomial(d * k + k + 1, k)
    elif kind == const.MOBIUS:
        value = (-1) ** k * Fraction(binomial(2 * d * k, k), 2 * d * k - k + 1)
    elif kind == const.SINGLETON:
        value = Fraction(binomial(d * k + k, k), d * k + 1)
    elif kind == const.SMALL_BLOCKS:
        value = Fraction(2, d * k + 2) * binomial(d * k + 2, k)
    elif kind == const.SMALL_BLOCKS_SINGLETON:
        value = Fraction(binomial(d * k + 1, k), d * k + 1)
    else:
        value = Fraction(binomial(2 * d * k, k), 2 * d * k - k + 1)
    return _exact(value, f"{kind}(d={d}, k={k})")
