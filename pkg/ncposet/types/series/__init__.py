"""
.. _TruncatedSeries:

Truncated power series
======================

Polynomials in :math:`x, s, t` with :code:`Fraction` coefficients, truncated
above a fixed degree in :math:`x`. Storage is sparse, keyed by exponent
triples :code:`(x, s, t)`.

.. ipython:: python

    from ncposet.types import TruncatedSeries

    x = TruncatedSeries.variable("x", 4)
    geometric = (1 - x).reciprocal()
    [geometric.coefficient(k) for k in range(5)]

Arithmetic between series of different orders keeps the smaller order.
"""
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

import attr

import ncposet.constants as const
from ncposet.types.schema import SeriesSchema, SeriesTermSchema

Monomial = Tuple[int, int, int]
Scalar = Union[int, Fraction]

UNIT: Monomial = (0, 0, 0)
POSITIONS = {const.X: 0, const.S: 1, const.T: 2}


def _clean(terms: Mapping[Monomial, Scalar], order: int) -> Dict[Monomial, Fraction]:
    cleaned: Dict[Monomial, Fraction] = {}
    for monomial, coefficient in terms.items():
        if len(monomial) != 3 or any(exponent < 0 for exponent in monomial):
            raise ValueError(f"Exponents should be three nonnegative integers, got {monomial}.")
        if coefficient != 0 and monomial[0] <= order:
            cleaned[tuple(monomial)] = Fraction(coefficient)  # type: ignore[index]
    return cleaned


@attr.s(frozen=True, repr=False, hash=False)
class TruncatedSeries:
    order = attr.ib(type=int, validator=attr.validators.instance_of(int))
    terms = attr.ib(type=Dict[Monomial, Fraction], factory=dict)

    def __attrs_post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"Truncation order should be nonnegative, got {self.order}.")
        object.__setattr__(self, "terms", _clean(self.terms, self.order))

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "TruncatedSeries":
        return cls(order, {UNIT: value})

    @classmethod
    def variable(cls, name: str, order: int) -> "TruncatedSeries":
        if name not in POSITIONS:
            raise ValueError(f"Unknown variable {name!r}, expected one of {const.VARIABLES}.")
        exponents = [0, 0, 0]
        exponents[POSITIONS[name]] = 1
        return cls(order, {tuple(exponents): 1})  # type: ignore[dict-item]

    @classmethod
    def from_sequence(cls, coefficients: Sequence[Scalar], order: int) -> "TruncatedSeries":
        """
        Σ c_k x^k for the given coefficients, missing ones are zero.
        """
        return cls(order, {(power, 0, 0): value for power, value in enumerate(coefficients)})

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(min(order, self.order), self.terms)

    def coefficient(self, x: int, s: int = 0, t: int = 0) -> Fraction:
        if x > self.order:
            raise ValueError(f"Coefficient of x^{x} is beyond the truncation order {self.order}.")
        return self.terms.get((x, s, t), Fraction(0))

    def x_coefficient(self, power: int) -> Dict[Tuple[int, int], Fraction]:
        """
        [x^power] as a polynomial in s and t, keyed by (s, t) exponents.
        """
        if power > self.order:
            raise ValueError(f"Coefficient of x^{power} is beyond the truncation order {self.order}.")
        return {(s, t): value for (x, s, t), value in self.terms.items() if x == power}

    def constant_term(self) -> Fraction:
        return self.terms.get(UNIT, Fraction(0))

    def has_scalar_x0_part(self) -> bool:
        return all(monomial == UNIT for monomial in self.terms if monomial[0] == 0)

    def is_graded(self) -> bool:
        """Every monomial s^i t^j x^k has i + j = k."""
        return all(s + t == x for x, s, t in self.terms)

    def _coerce(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        raise TypeError(f"Cannot combine a series with {type(other).__name__}.")

    def __add__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        other = self._coerce(other)
        terms = dict(self.terms)
        for monomial, value in other.terms.items():
            terms[monomial] = terms.get(monomial, Fraction(0)) + value
        return TruncatedSeries(min(self.order, other.order), terms)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, {monomial: -value for monomial, value in self.terms.items()})

    def __sub__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        return self._coerce(other) + (-self)

    def __mul__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, {m: value * other for m, value in self.terms.items()})
        other = self._coerce(other)
        order = min(self.order, other.order)
        terms: Dict[Monomial, Fraction] = {}
        for (x1, s1, t1), left in self.terms.items():
            if x1 > order:
                continue
            for (x2, s2, t2), right in other.terms.items():
                if x1 + x2 > order:
                    continue
                monomial = (x1 + x2, s1 + s2, t1 + t2)
                terms[monomial] = terms.get(monomial, Fraction(0)) + left * right
        return TruncatedSeries(order, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def reciprocal(self) -> "TruncatedSeries":
        """
        1/f for f whose x^0 part is a nonzero constant.

        :raises ValueError: If the x^0 part is zero or involves s or t.
        """
        unit = self.constant_term()
        if unit == 0 or not self.has_scalar_x0_part():
            raise ValueError("Only series with a nonzero constant x^0 part can be inverted.")
        shifted = (self - unit) * Fraction(-1, 1) * (1 / unit)
        result = TruncatedSeries.constant(1, self.order)
        power = TruncatedSeries.constant(1, self.order)
        for _ in range(self.order):
            power = power * shifted
            result = result + power
        return result * (1 / unit)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """
        Substitute `inner` for x.

        :raises ValueError: If `inner` has terms of x-degree zero.
        """
        if any(monomial[0] == 0 for monomial in inner.terms):
            raise ValueError("Composition needs an inner series without x^0 terms.")
        order = min(self.order, inner.order)
        powers = [TruncatedSeries.constant(1, order)]
        for _ in range(order):
            powers.append(powers[-1] * inner)
        result = TruncatedSeries(order)
        for (x, s, t), value in self.terms.items():
            if x <= order:
                result = result + powers[x] * TruncatedSeries(order, {(0, s, t): value})
        return result

    def euler(self, name: str) -> "TruncatedSeries":
        """Multiply every coefficient by its exponent of `name`, the operator v·∂/∂v."""
        position = POSITIONS[name]
        return TruncatedSeries(
            self.order,
            {monomial: value * monomial[position] for monomial, value in self.terms.items()},
        )

    def specialize(self, s: Optional[Scalar] = None, t: Optional[Scalar] = None) -> "TruncatedSeries":
        """Evaluate s and/or t at the given values."""
        terms: Dict[Monomial, Fraction] = {}
        for (x, s_power, t_power), value in self.terms.items():
            if s is not None:
                value *= Fraction(s) ** s_power
                s_power = 0
            if t is not None:
                value *= Fraction(t) ** t_power
                t_power = 0
            monomial = (x, s_power, t_power)
            terms[monomial] = terms.get(monomial, Fraction(0)) + value
        return TruncatedSeries(self.order, terms)

    def homogenize(self, order: int) -> "TruncatedSeries":
        """
        Map a polynomial in s, t to Σ c·x^(i+j) s^i t^j, truncated at `order`.

        :raises ValueError: If the series already involves x.
        """
        if any(monomial[0] for monomial in self.terms):
            raise ValueError("Only polynomials in s and t can be homogenized.")
        return TruncatedSeries(
            order, {(s + t, s, t): value for (_, s, t), value in self.terms.items()}
        )

    def substitute(self, first: "TruncatedSeries", second: "TruncatedSeries") -> "TruncatedSeries":
        """
        Evaluate a polynomial g(s, t) at s = `first`, t = `second`.
        """
        if any(monomial[0] for monomial in self.terms):
            raise ValueError("Only polynomials in s and t can be substituted into.")
        order = min(first.order, second.order)
        result = TruncatedSeries(order)
        for (_, s, t), value in self.terms.items():
            result = result + (first ** s) * (second ** t) * value
        return result

    def to_schema(self) -> SeriesSchema:
        return SeriesSchema(
            order=self.order,
            terms=[
                SeriesTermSchema(x=x, s=s, t=t, num=value.numerator, den=value.denominator)
                for (x, s, t), value in sorted(self.terms.items())
            ],
        )

    @classmethod
    def from_schema(cls, schema: SeriesSchema) -> "TruncatedSeries":
        return cls(
            schema.order,
            {(term.x, term.s, term.t): Fraction(term.num, term.den) for term in schema.terms},
        )

    def items(self) -> Iterable[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return f"0 + O(x^{self.order + 1})"
        parts = []
        for (x, s, t), value in self.items():
            powers = "".join(
                f"*{name}^{power}" for name, power in zip(const.VARIABLES, (x, s, t)) if power
            )
            parts.append(f"{value}{powers}")
        return " + ".join(parts) + f" + O(x^{self.order + 1})"
