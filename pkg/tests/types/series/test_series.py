"""
Tests for TruncatedSeries
"""
from fractions import Fraction

import pytest

from ncposet.types import SeriesSchema, TruncatedSeries


def test_geometric_series() -> None:
    x = TruncatedSeries.variable("x", 5)
    geometric = (1 - x).reciprocal()
    assert [geometric.coefficient(k) for k in range(6)] == [1] * 6
    assert (geometric * (1 - x)).terms == {(0, 0, 0): 1}


def test_truncation() -> None:
    x = TruncatedSeries.variable("x", 2)
    assert (x ** 3).terms == {}
    assert repr(x ** 3) == "0 + O(x^3)"
    with pytest.raises(ValueError):
        x.coefficient(3)
    assert (x + TruncatedSeries.variable("x", 4)).order == 2


def test_fractions_stay_exact() -> None:
    x = TruncatedSeries.variable("x", 3)
    half = (2 - x).reciprocal()
    assert half.coefficient(0) == Fraction(1, 2)
    assert half.coefficient(3) == Fraction(1, 16)


def test_compose() -> None:
    x = TruncatedSeries.variable("x", 4)
    geometric = (1 - x).reciprocal()
    doubled = geometric.compose(2 * x)
    assert [doubled.coefficient(k) for k in range(5)] == [1, 2, 4, 8, 16]
    with pytest.raises(ValueError):
        geometric.compose(1 + x)


def test_marked_variables() -> None:
    x = TruncatedSeries.variable("x", 2)
    s = TruncatedSeries.variable("s", 2)
    t = TruncatedSeries.variable("t", 2)
    f = (x * s + x * t) ** 2
    assert f.is_graded()
    assert f.x_coefficient(2) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert f.specialize(s=1, t=2).coefficient(2) == 9
    assert f.euler("s").coefficient(2, 1, 1) == 2
    assert not (x * s * s).is_graded()


def test_polynomials_in_s_and_t() -> None:
    g = TruncatedSeries(0, {(0, 0, 0): 1, (0, 1, 0): 2})
    homogeneous = g.homogenize(3)
    assert homogeneous.terms == {(0, 0, 0): 1, (1, 1, 0): 2}
    x = TruncatedSeries.variable("x", 3)
    assert g.substitute(x, x).coefficient(1) == 2
    with pytest.raises(ValueError):
        x.homogenize(2)


def test_invalid_series() -> None:
    with pytest.raises(ValueError):
        TruncatedSeries(-1)
    with pytest.raises(ValueError):
        TruncatedSeries.variable("y", 2)
    with pytest.raises(ValueError):
        TruncatedSeries(2, {(1, 0): 1})
    with pytest.raises(ValueError):
        TruncatedSeries.variable("x", 2).reciprocal()
    with pytest.raises(TypeError):
        TruncatedSeries.variable("x", 2) + 0.5


def test_schema() -> None:
    x = TruncatedSeries.variable("x", 3)
    series = (1 - x * Fraction(1, 3)).reciprocal()
    schema = SeriesSchema.parse_raw(series.to_schema().json())
    assert schema.terms[1].den == 3
    assert TruncatedSeries.from_schema(schema).terms == series.terms
