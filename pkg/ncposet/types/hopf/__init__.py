"""
.. _Hopf:

Antipode values and hypertrees
==============================

A :code:`HopfElement` is an integer combination of products of posets
:math:`NC^d_{m_1} \\times \\dots \\times NC^d_{m_r}`, each product keyed by its
sorted sizes. Factors of size 1 are the unit and never stored.

.. ipython:: python

    from ncposet.types import HopfElement

    value = HopfElement.monomial([3, 1, 3], 5) - HopfElement.monomial([5])
    value, value.coefficient([3, 3])
"""
from typing import Callable, Dict, Iterable, List, Tuple, Union

import attr
from networkx.utils import UnionFind

from ncposet.types.schema import AntipodeTermSchema

Sizes = Tuple[int, ...]


def normalize(sizes: Iterable[int]) -> Sizes:
    sizes = list(sizes)
    if any(size < 1 for size in sizes):
        raise ValueError(f"Factor sizes should be positive, got {sizes}.")
    return tuple(sorted(size for size in sizes if size > 1))


def _clean(terms: Dict[Sizes, int]) -> Dict[Sizes, int]:
    cleaned: Dict[Sizes, int] = {}
    for sizes, coefficient in terms.items():
        key = normalize(sizes)
        cleaned[key] = cleaned.get(key, 0) + coefficient
    return {key: value for key, value in cleaned.items() if value}


@attr.s(frozen=True, repr=False, hash=False)
class HopfElement:
    terms = attr.ib(type=Dict[Sizes, int], factory=dict, converter=_clean)

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def zero(cls) -> "HopfElement":
        return cls()

    @classmethod
    def unit(cls) -> "HopfElement":
        return cls({(): 1})

    @classmethod
    def monomial(cls, sizes: Iterable[int], coefficient: int = 1) -> "HopfElement":
        return cls({tuple(sizes): coefficient})

    def coefficient(self, sizes: Iterable[int]) -> int:
        return self.terms.get(normalize(sizes), 0)

    def __add__(self, other: "HopfElement") -> "HopfElement":
        terms = dict(self.terms)
        for sizes, value in other.terms.items():
            terms[sizes] = terms.get(sizes, 0) + value
        return HopfElement(terms)

    def __neg__(self) -> "HopfElement":
        return self.scale(-1)

    def __sub__(self, other: "HopfElement") -> "HopfElement":
        return self + (-other)

    def __mul__(self, other: Union["HopfElement", int]) -> "HopfElement":
        if isinstance(other, int):
            return self.scale(other)
        terms: Dict[Sizes, int] = {}
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                key = tuple(sorted(left + right))
                terms[key] = terms.get(key, 0) + a * b
        return HopfElement(terms)

    __rmul__ = __mul__

    def scale(self, factor: int) -> "HopfElement":
        return HopfElement({sizes: value * factor for sizes, value in self.terms.items()})

    def evaluate(self, character: Callable[[int], int]) -> int:
        """
        Replace every factor NC^d_m by character(m).
        """
        total = 0
        for sizes, value in self.terms.items():
            product = value
            for size in sizes:
                product *= character(size)
            total += product
        return total

    def items(self) -> List[Tuple[Sizes, int]]:
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def to_schema(self) -> List[AntipodeTermSchema]:
        return [AntipodeTermSchema(sizes=list(sizes), coeff=value) for sizes, value in self.items()]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for sizes, value in self.items():
            factor = "[" + ",".join(str(size) for size in sizes) + "]"
            if value == 1:
                parts.append(f"+ {factor}")
            elif value == -1:
                parts.append(f"- {factor}")
            else:
                parts.append(f"{'+' if value > 0 else '-'} {abs(value)}*{factor}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


Edge = Tuple[int, ...]


@attr.s(frozen=True, repr=False)
class Hypertree:
    """
    A connected hypergraph on [n] with Σ (|E| − 1) = n − 1.
    """

    n = attr.ib(type=int, validator=attr.validators.instance_of(int))
    edges = attr.ib(
        type=Tuple[Edge, ...],
        converter=lambda edges: tuple(sorted(tuple(sorted(edge)) for edge in edges)),
    )

    def __attrs_post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"Ground set size should be positive, got {self.n}.")
        for edge in self.edges:
            if len(edge) < 2 or len(set(edge)) != len(edge):
                raise ValueError(f"Edge {edge} should hold at least two distinct vertices.")
            if edge[0] < 1 or edge[-1] > self.n:
                raise ValueError(f"Edge {edge} leaves [1, {self.n}].")
        if sum(len(edge) - 1 for edge in self.edges) != self.n - 1:
            raise ValueError(f"Edges {self.edges} do not have total excess {self.n - 1}.")
        components = UnionFind(range(1, self.n + 1))
        for edge in self.edges:
            components.union(*edge)
        if len(list(components.to_sets())) != 1:
            raise ValueError(f"Edges {self.edges} do not connect [1, {self.n}].")

    def sizes(self) -> Sizes:
        return tuple(sorted(len(edge) for edge in self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        edges = ", ".join("{" + ",".join(str(v) for v in edge) + "}" for edge in self.edges)
        return f"Hypertree(n={self.n}, [{edges}])"
