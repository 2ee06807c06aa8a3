"""
Tests for NoncrossingPartition
"""
import pytest

from ncposet.types import NoncrossingPartition, PartitionSchema


def test_canonical_form() -> None:
    """
    Blocks are sorted inside and by their minima, whatever order they arrive in.
    """
    pi = NoncrossingPartition(5, [(5, 4), (3,), (2, 1)])
    assert pi.blocks == ((1, 2), (3,), (4, 5))
    assert pi == NoncrossingPartition.parse("1,2|3|4,5")
    assert hash(pi) == hash(NoncrossingPartition.parse("4,5|1,2|3"))


def test_parse_and_str() -> None:
    pi = NoncrossingPartition.parse("1|2,9,10|3|4,5,6,7,8|11")
    assert pi.n == 11
    assert len(pi) == 5
    assert str(pi) == "1|2,9,10|3|4,5,6,7,8|11"
    assert repr(pi) == "NoncrossingPartition(n=11, blocks='1|2,9,10|3|4,5,6,7,8|11')"
    assert pi.sizes() == [1, 3, 1, 5, 1]
    assert pi.rank(2) == 3
    assert pi.has_singleton_one()
    assert not NoncrossingPartition.top(3).has_singleton_one()


def test_block_of() -> None:
    pi = NoncrossingPartition.parse("1|2,9,10|3|4,5,6,7,8|11")
    assert pi.block_of(10) == pi.block_of(2) == 1
    assert pi.block_of(11) == 4
    assert list(pi)[3] == (4, 5, 6, 7, 8)


@pytest.mark.parametrize(
    "n,blocks",
    [
        (4, [(1, 3), (2, 4)]),
        (3, [(1, 2)]),
        (3, [(1, 2), (2, 3)]),
        (3, [(1, 2), (3, 4)]),
        (3, [(1, 2, 3), ()]),
        (0, []),
    ],
)
def test_invalid_partitions(n, blocks) -> None:
    with pytest.raises(ValueError):
        NoncrossingPartition(n, blocks)


def test_unparseable_text() -> None:
    with pytest.raises(ValueError):
        NoncrossingPartition.parse("1|2;3")


def test_bottom_and_top() -> None:
    assert str(NoncrossingPartition.bottom(4)) == "1|2|3|4"
    assert str(NoncrossingPartition.top(4)) == "1,2,3,4"
    assert NoncrossingPartition.bottom(1) == NoncrossingPartition.top(1)


def test_schema() -> None:
    pi = NoncrossingPartition.parse("1,4|2,3|5")
    schema = PartitionSchema.parse_raw(pi.to_schema().json())
    assert schema.blocks == [[1, 4], [2, 3], [5]]
    assert NoncrossingPartition.from_schema(schema) == pi
