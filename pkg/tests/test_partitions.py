import pytest

from tools.models import Cell, InvalidPartitionError, MullineuxError, Partition, PartitionFilter
from tools.partitions import EMPTY, conjugate, count, enumerate_partitions, is_e_regular, make_partition, parse_partition, partition_from_json, remove_cells, rim, self_conjugate_from_hooks, self_conjugate_partitions


def test_make_partition_strips_trailing_zeros():
    lam = make_partition([3, 1, 0, 0])
    assert lam.parts == (3, 1)
    assert lam.n == 4


def test_make_partition_rejects_bad_parts():
    with pytest.raises(InvalidPartitionError):
        make_partition([1, 2])
    with pytest.raises(InvalidPartitionError):
        make_partition([2, -1])


def test_parse_partition_cli_syntax():
    assert parse_partition("7,7,7,4,4,1,1").parts == (7, 7, 7, 4, 4, 1, 1)
    assert parse_partition("(3, 1)").parts == (3, 1)
    assert parse_partition("()") == EMPTY
    with pytest.raises(InvalidPartitionError):
        parse_partition("3;x")


def test_partition_json():
    assert partition_from_json("[7,7,7,4,4,1,1]").to_json() == [7, 7, 7, 4, 4, 1, 1]
    assert partition_from_json("[]") == EMPTY
    with pytest.raises(InvalidPartitionError):
        partition_from_json('{"parts": [1]}')


def test_conjugate():
    assert conjugate(make_partition([4, 2, 1])).parts == (3, 2, 1, 1)
    assert conjugate(EMPTY) == EMPTY


def test_rim_counts_every_boundary_cell():
    cells = rim(make_partition([7, 7, 7, 4, 4, 1, 1]))
    assert len(cells) == 13
    assert cells[0] == Cell(1, 7)
    assert cells[-1] == Cell(7, 1)
    assert Cell(3, 4) in cells


def test_rim_of_empty_partition_is_an_error():
    with pytest.raises(InvalidPartitionError):
        rim(EMPTY)


def test_remove_cells_rejects_holes():
    lam = make_partition([2, 2])
    assert remove_cells(lam, [Cell(2, 2), Cell(2, 1)]).parts == (2,)
    with pytest.raises(InvalidPartitionError):
        remove_cells(lam, [Cell(1, 1), Cell(1, 2)])


def test_enumeration_is_lexicographically_decreasing():
    parts = [lam.parts for lam in enumerate_partitions(4)]
    assert parts == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(enumerate_partitions(0)) == [Partition(())]


def test_counts_by_filter():
    assert count(5) == 7
    assert count(10) == 42
    assert count(10, PartitionFilter.distinct()) == 10
    assert count(8, PartitionFilter.distinct_odd()) == 2
    assert count(6, PartitionFilter.e_regular(3)) == 7
    assert count(5, PartitionFilter.odd_parts()) == 3


def test_every_enumerated_partition_satisfies_its_filter():
    for lam in enumerate_partitions(12, PartitionFilter.e_regular(3)):
        assert is_e_regular(lam, 3)
    for lam in enumerate_partitions(15, PartitionFilter.odd_or_odd_multiple(4)):
        odd = [p for p in lam.parts if p % 2]
        assert len(odd) == len(set(odd))
        assert all(p % 2 or (p % 4 == 0 and (p // 4) % 2) for p in lam.parts)


def test_filter_validation():
    with pytest.raises(MullineuxError):
        PartitionFilter("e_regular")
    with pytest.raises(MullineuxError):
        PartitionFilter("bogus")


def test_self_conjugate_from_hooks():
    assert self_conjugate_from_hooks([5, 1]).parts == (3, 2, 1)
    assert self_conjugate_from_hooks([]) == EMPTY
    with pytest.raises(InvalidPartitionError):
        self_conjugate_from_hooks([4])


def test_self_conjugate_partitions_are_self_conjugate():
    assert [lam.parts for lam in self_conjugate_partitions(6)] == [(3, 2, 1)]
    for n in range(15):
        for lam in self_conjugate_partitions(n):
            assert conjugate(lam) == lam
            assert lam.n == n
