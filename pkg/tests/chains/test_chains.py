import pytest

from ncposet.chains import (
    chain_to_parking,
    chains_of,
    edge_label,
    el_check,
    enumerate_parking,
    falling_chains,
    falling_count,
    is_d_parking,
    is_falling,
    parking_to_chain,
    rising_chains,
    singletons_before_last_max,
    sorted_profiles,
    star_labels,
)
from ncposet.errors import NotACoverError
from ncposet.formulas import closed_form
from ncposet.poset import build_poset
from ncposet.types import DParkingFunction, MaximalChain, NoncrossingPartition
from tests import EXCEPTIONS, load_tests


@pytest.mark.parametrize("payload", load_tests("cases", __file__))
def test_parking_to_chain(payload) -> None:
    exception = payload.get("exception")
    if exception:
        with pytest.raises(EXCEPTIONS[exception]):
            DParkingFunction(payload["d"], payload["values"])
        return

    pf = DParkingFunction(payload["d"], payload["values"])
    chain = parking_to_chain(pf)
    assert [str(pi) for pi in chain] == payload["chain"]
    assert chain_to_parking(chain) == pf
    assert list(star_labels(chain)) == payload["star_labels"]
    assert singletons_before_last_max(chain, pf)


@pytest.mark.parametrize("d,k,count", [(1, 3, 16), (1, 4, 125), (2, 2, 5), (2, 3, 49), (3, 2, 7)])
def test_parking_functions_count(d, k, count) -> None:
    functions = list(enumerate_parking(d, k))
    assert len(functions) == count
    assert len(set(functions)) == count


@pytest.mark.parametrize(
    "n,d", [(2, 1), (3, 1), (4, 1), (5, 1), (3, 2), (5, 2), (7, 2), (7, 3)]
)
def test_chains_biject_with_parking_functions(n, d) -> None:
    chains = chains_of(build_poset(n, d))
    functions = {chain_to_parking(chain) for chain in chains}
    assert len(functions) == len(chains)
    assert functions == set(enumerate_parking(d, (n - 1) // d))
    assert all(parking_to_chain(chain_to_parking(chain)) == chain for chain in chains)


def test_last_maximum_sees_fresh_singletons() -> None:
    for pf in enumerate_parking(2, 3):
        assert singletons_before_last_max(parking_to_chain(pf), pf)


def test_sorted_profiles() -> None:
    assert list(sorted_profiles(1, 2)) == [(1, 1), (1, 2)]
    assert list(sorted_profiles(2, 2)) == [(1, 1), (1, 2), (1, 3)]
    assert list(sorted_profiles(2, 0)) == [()]
    with pytest.raises(ValueError):
        list(sorted_profiles(0, 2))


def test_is_d_parking() -> None:
    assert is_d_parking((2, 1, 3, 1, 3), 2)
    assert is_d_parking((1, 3), 2)
    assert not is_d_parking((1, 4), 2)
    assert not is_d_parking((2, 2), 1)
    assert not is_d_parking((0, 1), 1)
    assert is_d_parking((), 4)
    with pytest.raises(ValueError):
        is_d_parking((1,), 0)


FULL_GRID = (
    [(1, k) for k in range(1, 7)]
    + [(2, k) for k in range(1, 5)]
    + [(3, k) for k in range(1, 4)]
    + [(4, k) for k in range(1, 3)]
)


@pytest.mark.parametrize("d,k", FULL_GRID)
def test_falling_chains(d, k) -> None:
    expected = closed_form("falling_chains", d, k=k)
    assert falling_count(d, k) == expected
    assert len(falling_chains(build_poset(d * k + 1, d))) == expected


def test_is_falling() -> None:
    assert is_falling((1, 2), 1)
    assert not is_falling((2, 1), 1)
    assert is_falling((2, 1), 2)


@pytest.mark.parametrize("n,d", [(3, 1), (4, 1), (5, 1), (5, 2), (7, 2), (7, 3)])
def test_el_labeling(n, d) -> None:
    poset = build_poset(n, d)
    report = el_check(poset)
    assert report.ok
    assert report.intervals == sum(
        1 for lower in range(len(poset)) for upper in range(len(poset)) if lower != upper and poset.leq(lower, upper)
    )
    assert len(rising_chains(poset)) == 1
    k = poset.rank
    assert report.rising_labels == tuple((k - 1 - step) * d + 1 for step in range(k))


def test_edge_label_needs_a_cover() -> None:
    bottom, top = NoncrossingPartition.bottom(3), NoncrossingPartition.top(3)
    with pytest.raises(NotACoverError):
        edge_label(bottom, top, 1)
    with pytest.raises(NotACoverError):
        edge_label(NoncrossingPartition.parse("1,2|3|4"), NoncrossingPartition.parse("1|2,3,4"), 1)
    assert edge_label(bottom, top, 2) == 1


def test_maximal_chain_validation() -> None:
    with pytest.raises(ValueError):
        MaximalChain(1, [])
    with pytest.raises(ValueError):
        MaximalChain(1, [NoncrossingPartition.bottom(3), NoncrossingPartition.top(3)])
    with pytest.raises(ValueError):
        MaximalChain(1, [NoncrossingPartition.parse("1|2,3"), NoncrossingPartition.top(3)])


@pytest.mark.parametrize(
    "d,chain",
    [
        (3, ["1|2|3|4|5|6|7", "1,2|3,4,5|6|7", "1,2,3,4,5,6,7"]),
        (2, ["1|2|3|4|5", "1,2|3,4|5", "1,2,3,4,5"]),
        (2, ["1|2|3|4|5", "1,2,3,4|5", "1,2,3,4,5"]),
        (2, ["1|2|3|4|5|6|7", "1,2,3|4|5|6|7", "1,2,3|4,5,6,7", "1,2,3,4,5,6,7"]),
    ],
)
def test_maximal_chain_steps_stay_in_the_poset(d, chain) -> None:
    with pytest.raises(ValueError):
        MaximalChain(d, [NoncrossingPartition.parse(pi) for pi in chain])


@pytest.mark.parametrize("d,k", [(1, 3), (2, 2), (3, 2)])
def test_every_chain_of_the_poset_is_valid(d, k) -> None:
    for chain in chains_of(build_poset(d * k + 1, d)):
        assert MaximalChain(d, chain.partitions) == chain


def test_replicate() -> None:
    assert DParkingFunction(2, (2, 1)).replicate() == DParkingFunction(1, (2, 2, 1, 1))
    assert str(DParkingFunction(2, (2, 1, 3, 1, 3))) == "(2,1,3,1,3)"
    assert DParkingFunction(2, (2, 1, 3, 1, 3)).n == 11
