import pytest

from vanderspec.moments import SetPartition, bell_number, catalan_number, enumerate_partitions, four_cycle_partition, \
    is_noncrossing


@pytest.mark.parametrize("r, bell, catalan", [
    (1, 1, 1),
    (2, 2, 2),
    (3, 5, 5),
    (4, 15, 14),
    (5, 52, 42),
    (6, 203, 132),
    (7, 877, 429),
    (8, 4140, 1430),
])
def test_partition_counts(r, bell, catalan):
    partitions = enumerate_partitions(r)

    assert len(partitions) == bell == bell_number(r)
    assert len(set(partitions)) == bell
    assert sum(is_noncrossing(rho) for rho in partitions) == catalan == catalan_number(r)


@pytest.mark.parametrize("r", [0, 9])
def test_ground_set_limits(r):
    with pytest.raises(ValueError, match="1..8"):
        enumerate_partitions(r)


def test_four_cycle_partition():
    rho = four_cycle_partition()

    assert repr(rho) == "{{1,3},{2,4}}"
    assert rho.size == 2
    assert rho.labels() == [0, 1, 0, 1]
    assert not is_noncrossing(rho)
    assert rho.rotated(1) == rho


def test_blocks_are_canonical():
    rho = SetPartition(4, [[4, 2], [3], [1]])
    assert rho.blocks == ((1,), (2, 4), (3,))
    assert rho == SetPartition(4, [[1], [3], [2, 4]])
    assert hash(rho) == hash(SetPartition(4, [[1], [3], [2, 4]]))


def test_rotation_of_a_noncrossing_partition():
    rho = SetPartition(4, [[1, 2], [3, 4]])
    assert rho.rotated(1) == SetPartition(4, [[1, 4], [2, 3]])
    assert is_noncrossing(rho.rotated(1))


@pytest.mark.parametrize("blocks", [
    [[1, 2], [2, 3, 4]],
    [[1, 2], [4]],
    [[1, 2, 3, 4], []],
    [[0, 1], [2, 3]],
])
def test_invalid_partitions(blocks):
    with pytest.raises(ValueError, match="do not partition"):
        SetPartition(4, blocks)
