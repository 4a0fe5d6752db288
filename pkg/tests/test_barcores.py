import random

import pytest

from tools.barcores import abacus_display, bar_core, bar_core_steps, bar_cores, kappa, odd_parts_count, partition_count, render_abacus, same_barcore_count, tuple_count
from tools.golden import CUBIC_PARTITIONS_PREFIX
from tools.models import InvalidPartitionError, PartitionFilter
from tools.partitions import EMPTY, enumerate_partitions, make_partition

EXAMPLE = make_partition([23, 21, 17, 13, 11, 9, 7])


def test_abacus_display_places_beads_at_parts():
    abacus = abacus_display(EXAMPLE, 6)
    assert [abacus.runner(p) for p in EXAMPLE] == [5, 3, 5, 1, 5, 3, 1]
    assert [abacus.row(p) for p in EXAMPLE] == [3, 3, 2, 2, 1, 1, 1]
    assert abacus.to_json() == {"t": 6, "beads": [7, 9, 11, 13, 17, 21, 23]}
    single = abacus_display(make_partition([1]), 2)
    assert (single.runner(1), single.row(1)) == (1, 0)


def test_abacus_display_needs_distinct_parts():
    with pytest.raises(InvalidPartitionError):
        abacus_display(make_partition([3, 3]), 4)


def test_odd_parts_avoid_runners_zero_and_half():
    for n in range(21):
        for lam in enumerate_partitions(n, PartitionFilter.distinct_odd()):
            for state in bar_core_steps(lam, 8, random.Random(n)):
                assert not {state.runner(b) for b in state.beads} & {0, 4}


def test_worked_example_bar_core():
    dec = bar_core(EXAMPLE, 6)
    assert dec.core.parts == (9, 5, 3)
    assert dec.bar_weight == 14
    assert render_abacus(abacus_display(dec.core, 6)) == "0 1 2 3 4 5\n. . . o . o\n. . . o . ."


def test_small_partitions_are_their_own_core():
    dec = bar_core(make_partition([5, 1]), 8)
    assert dec.core.parts == (5, 1)
    assert dec.bar_weight == 0


def test_two_bar_core_that_is_not_a_four_bar_core():
    two = bar_core(make_partition([3, 1]), 2)
    assert two.core.parts == (3, 1) and two.bar_weight == 0
    assert not two.canonical_domain
    four = bar_core(make_partition([3, 1]), 4)
    assert four.core == EMPTY and four.bar_weight == 1
    assert four.canonical_domain


def test_steps_remove_t_each_time():
    states = list(bar_core_steps(EXAMPLE, 6))
    sizes = [sum(s.beads) for s in states]
    assert sizes[0] == EXAMPLE.n
    assert all(a - b == 6 for a, b in zip(sizes, sizes[1:]))
    assert len(states) == 15


def test_operation_order_does_not_matter_on_odd_parts():
    rng = random.Random(7)
    for n in range(25):
        for lam in enumerate_partitions(n, PartitionFilter.distinct_odd()):
            assert bar_core(lam, 4, rng) == bar_core(lam, 4)
            assert bar_core(lam, 8, rng) == bar_core(lam, 8)


def test_tuple_count():
    assert tuple_count(3, 0) == 1
    assert tuple_count(0, 0) == 1
    assert tuple_count(0, 3) == 0
    assert [tuple_count(1, s) for s in range(8)] == [partition_count(s) for s in range(8)]
    assert tuple_count(2, 2) == 5


def test_kappa():
    assert kappa(1, 2) == 2
    assert kappa(3, 0) == 1
    assert tuple(kappa(2, s) for s in range(len(CUBIC_PARTITIONS_PREFIX))) == CUBIC_PARTITIONS_PREFIX


def test_count_helpers():
    assert partition_count(5) == 7
    assert odd_parts_count(5) == 3


def test_same_barcore_count_matches_tuples():
    assert same_barcore_count(make_partition([1]), 4, 0) == 1
    assert [same_barcore_count(EMPTY, 4, w) for w in range(4)] == [1, 1, 2, 3]
    for size in range(8):
        for mu in bar_cores(size, 8):
            for w in range(3):
                assert same_barcore_count(mu, 8, w) == tuple_count(2, w)
