import pytest

from ncposet.antipode import (
    antipode_hypertrees,
    antipode_schmitt,
    brute_force_hypertrees,
    enumerate_hypertrees,
    is_noncrossing_hypertree,
    mobius_via_hypertrees,
    phi,
    phi_chain,
)
from ncposet.errors import BudgetExceededError
from ncposet.formulas import closed_form
from ncposet.poset import build_poset, interval_factorization, maximal_chains, mobius
from ncposet.types import HopfElement, Hypertree, NoncrossingPartition
from tests import EXCEPTIONS, load_tests


@pytest.mark.parametrize("payload", load_tests("cases", __file__))
def test_antipode(payload) -> None:
    exception = payload.get("exception")
    if exception:
        with pytest.raises(EXCEPTIONS[exception]):
            antipode_hypertrees(payload["n"], payload["d"])
        return

    n, d = payload["n"], payload["d"]
    assert repr(antipode_hypertrees(n, d)) == payload["antipode"]
    assert repr(antipode_schmitt(build_poset(n, d))) == payload["antipode"]
    assert len(list(enumerate_hypertrees(n, d))) == payload["hypertrees"]


@pytest.mark.parametrize("n,d", [(3, 1), (4, 1), (5, 1), (5, 2), (7, 2), (7, 3)])
def test_chain_sum_equals_hypertree_sum(n, d) -> None:
    hypertrees = antipode_hypertrees(n, d)
    assert antipode_schmitt(build_poset(n, d)) == hypertrees
    assert hypertrees.coefficient([n]) == -1
    assert hypertrees.evaluate(lambda _: 1) == mobius_via_hypertrees(n, d)


@pytest.mark.parametrize(
    "d,k",
    [(1, k) for k in range(1, 7)]
    + [(2, k) for k in range(1, 5)]
    + [(3, k) for k in range(1, 4)]
    + [(4, k) for k in range(1, 3)],
)
def test_signed_hypertree_count_is_mobius(d, k) -> None:
    n = d * k + 1
    assert mobius_via_hypertrees(n, d) == closed_form("mobius", d, k=k)
    if n < 9:
        assert mobius_via_hypertrees(n, d) == mobius(build_poset(n, d))


@pytest.mark.parametrize("n,d", [(3, 1), (4, 1), (5, 1), (5, 2), (4, 3)])
def test_enumeration_matches_search(n, d) -> None:
    enumerated = list(enumerate_hypertrees(n, d))
    assert len(set(enumerated)) == len(enumerated)
    assert set(enumerated) == set(brute_force_hypertrees(n, d))


def test_hypertrees_on_three_vertices() -> None:
    found = {tree.edges for tree in enumerate_hypertrees(3, 1)}
    assert found == {((1, 2, 3),), ((1, 2), (2, 3)), ((1, 2), (1, 3)), ((1, 3), (2, 3))}


def test_is_noncrossing_hypertree() -> None:
    assert is_noncrossing_hypertree([(1, 2, 3)], 3, 2)
    assert not is_noncrossing_hypertree([(1, 2), (2, 3)], 3, 2)
    assert not is_noncrossing_hypertree([(1, 3), (2, 4), (1, 2)], 4)
    assert not is_noncrossing_hypertree([(1, 2), (1, 2)], 3)
    assert is_noncrossing_hypertree([(1, 2, 4), (2, 3)], 4)
    assert not is_noncrossing_hypertree([(1, 3, 4), (2, 5), (4, 5)], 5)
    assert is_noncrossing_hypertree([(1, 2, 3), (3, 4, 5)], 5, 2)
    assert not is_noncrossing_hypertree([(1, 3, 5), (2, 3, 4)], 5, 2)


def test_phi_on_the_whole_lattice() -> None:
    assert phi(NoncrossingPartition.bottom(3), NoncrossingPartition.top(3)) == [(1, 2, 3)]
    with pytest.raises(ValueError):
        phi(NoncrossingPartition.top(3), NoncrossingPartition.bottom(3))
    with pytest.raises(ValueError):
        phi(NoncrossingPartition.top(3), NoncrossingPartition.top(3))


@pytest.mark.parametrize("n,d", [(4, 1), (5, 2), (7, 2)])
def test_phi_of_a_cover_is_one_edge(n, d) -> None:
    poset = build_poset(n, d)
    for lower, upper in poset.cover_pairs():
        edges = phi(poset.elements[lower], poset.elements[upper])
        assert len(edges) == 1
        assert len(edges[0]) == d + 1


@pytest.mark.parametrize("n,d", [(4, 1), (5, 2)])
def test_phi_sizes_match_factorization(n, d) -> None:
    poset = build_poset(n, d)
    for lower in range(len(poset)):
        for upper in range(len(poset)):
            if lower != upper and poset.leq(lower, upper):
                pi, sigma = poset.elements[lower], poset.elements[upper]
                sizes = sorted(len(edge) for edge in phi(pi, sigma))
                assert tuple(sizes) == interval_factorization(poset, pi, sigma).sizes


@pytest.mark.parametrize("n,d", [(4, 1), (5, 2), (7, 2)])
def test_phi_of_a_chain_is_a_noncrossing_hypertree(n, d) -> None:
    for chain in maximal_chains(build_poset(n, d)):
        tree = phi_chain(chain)
        assert tree.sizes() == (d + 1,) * ((n - 1) // d)
        assert is_noncrossing_hypertree(tree.edges, n, d)


def test_chain_budget() -> None:
    with pytest.raises(BudgetExceededError):
        antipode_schmitt(build_poset(5, 1), budget=10)


def test_hopf_element_arithmetic() -> None:
    value = HopfElement.monomial([3, 1, 3], 5) - HopfElement.monomial([5])
    assert value.coefficient([3, 3]) == 5
    assert value.coefficient([1, 3, 3]) == 5
    assert repr(value) == "-[5] + 5*[3,3]"
    assert value.evaluate(lambda size: size) == 40
    assert repr(value * HopfElement.monomial([2])) == "-[2,5] + 5*[2,3,3]"
    assert value - value == HopfElement.zero()
    assert repr(HopfElement.zero()) == "0"
    assert HopfElement.unit() * value == value
    assert [term.dict() for term in value.to_schema()] == [
        {"sizes": [5], "coeff": -1},
        {"sizes": [3, 3], "coeff": 5},
    ]
    with pytest.raises(ValueError):
        HopfElement.monomial([0])


def test_hypertree_validation() -> None:
    assert Hypertree(1, []).sizes() == ()
    with pytest.raises(ValueError):
        Hypertree(3, [(1, 2)])
    with pytest.raises(ValueError):
        Hypertree(3, [(1, 2), (1, 2)])
    with pytest.raises(ValueError):
        Hypertree(3, [(1, 4), (2, 3)])
    with pytest.raises(ValueError):
        Hypertree(3, [(1,), (1, 2, 3)])
