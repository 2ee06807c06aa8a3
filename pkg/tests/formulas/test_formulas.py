from fractions import Fraction

import pytest

from ncposet.formulas import (
    KINDS,
    algebraic_coefficient,
    binomial,
    closed_form,
    generalized_binomial,
)
from tests import EXCEPTIONS, load_tests


@pytest.mark.parametrize("payload", load_tests("cases", __file__))
def test_closed_form(payload) -> None:
    arguments = {key: payload[key] for key in ("k", "i", "j") if key in payload}
    exception = payload.get("exception")
    if exception:
        with pytest.raises(EXCEPTIONS[exception]):
            closed_form(payload["kind"], payload["d"], **arguments)
    else:
        assert closed_form(payload["kind"], payload["d"], **arguments) == payload["expected"]


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_rank_counts_sum_to_cardinality(d) -> None:
    for k in range(6):
        total = sum(closed_form("rank_count", d, i=k - j, j=j) for j in range(k + 1))
        assert total == closed_form("cardinality", d, k=k)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_rank_counts_are_symmetric(d) -> None:
    for k in range(6):
        row = [closed_form("rank_count", d, i=k - j, j=j) for j in range(k + 1)]
        assert row == row[::-1]


def test_catalan_numbers() -> None:
    assert [closed_form("cardinality", 1, k=k) for k in range(7)] == [1, 2, 5, 14, 42, 132, 429]


def test_fuss_catalan_cardinalities() -> None:
    assert [closed_form("cardinality", 2, k=k) for k in range(5)] == [1, 2, 7, 30, 143]


def test_rank_parameters_must_agree() -> None:
    with pytest.raises(ValueError):
        closed_form("rank_count", 1, k=3, i=1, j=1)
    with pytest.raises(ValueError):
        closed_form("rank_count", 1, i=-1, j=1)


def test_every_kind_at_k_zero() -> None:
    for kind in KINDS:
        if kind in ("rank_count", "singleton_rank", "small_blocks_rank"):
            assert closed_form(kind, 2, i=0, j=0) == 1
        else:
            assert closed_form(kind, 2, k=0) == 1


def test_binomial() -> None:
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(5, -1) == 0
    assert binomial(-1, 3) == -1
    assert binomial(-2, 2) == 3


def test_generalized_binomial() -> None:
    assert generalized_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert generalized_binomial(Fraction(5), 2) == 10
    assert generalized_binomial(Fraction(-1, 2), 0) == 1
    assert generalized_binomial(Fraction(1, 3), -1) == 0


def test_algebraic_coefficient() -> None:
    assert [algebraic_coefficient(2, 1, n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert algebraic_coefficient(3, 1, 2) == 3
    assert algebraic_coefficient(2, 2, 2) == 5
    with pytest.raises(ValueError):
        algebraic_coefficient(0, 1, 1)
