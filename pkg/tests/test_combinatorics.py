from math import comb

import pytest

from quasihook.combinatorics import (
    Cell,
    HookShape,
    HookTableau,
    Partition,
    StrictPartition,
    cell_stats,
    count_p,
    count_q,
    count_standard_tableaux,
    partitions_of,
    remove_entry,
    standard_hook_tableaux,
    strict_partitions,
    strict_partitions_bounded,
    transpose_tableau,
)


def test_partition_trims_zeros_and_validates():
    assert Partition([3, 1, 0, 0]).parts == (3, 1)
    assert Partition([4, 3, 1]).conjugate().parts == (3, 2, 2, 1)
    with pytest.raises(ValueError):
        Partition([1, 2])


@pytest.mark.parametrize("lam, cell, expected", [
    ((4, 3, 1), (1, 1), (3, 2, 6)),
    ((1,), (1, 1), (0, 0, 1)),
    ((3, 1, 1), (1, 1), (2, 2, 5)),
])
def test_cell_stats(lam, cell, expected):
    assert cell_stats(Partition(lam), Cell(*cell)) == expected


def test_cell_stats_corner_of_hook():
    for n in range(2, 7):
        for k in range(1, n + 1):
            assert cell_stats(HookShape(n, k).partition(), Cell(1, 1)) == (n - k, k - 1, n)


def test_cell_outside_raises():
    with pytest.raises(ValueError):
        cell_stats(Partition([2]), Cell(2, 1))


def test_partitions_of_counts_and_order():
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(list(partitions_of(n))) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_hook_length_formula():
    assert count_standard_tableaux(Partition([4, 3, 1])) == 70
    for n in range(2, 8):
        for k in range(1, n + 1):
            assert count_standard_tableaux(HookShape(n, k).partition()) == comb(n - 1, k - 1)


def test_standard_hook_tableaux():
    tabs = standard_hook_tableaux(HookShape(4, 3))
    assert [str(t) for t in tabs] == ["D(1,2,3;1,4)", "D(1,2,4;1,3)", "D(1,3,4;1,2)"]
    assert all(t.is_standard() for t in tabs)
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert len(standard_hook_tableaux(HookShape(n, k))) == comb(n - 1, k - 1)


def test_tableau_invariants():
    with pytest.raises(ValueError):
        HookTableau((1, 2), (2, 3))
    with pytest.raises(ValueError):
        HookTableau((1, 2), (1, 2))
    t = HookTableau((3, 4), (3, 2, 5, 6))
    assert t.n == 5 and t.k == 2 and not t.is_standard()
    assert HookTableau.from_json(t.to_json()) == t
    assert t.to_json() == {"column": [3, 4], "row": [3, 2, 5, 6]}


def test_remove_entry_examples():
    t = HookTableau.standard(6, (1, 3, 4))
    assert str(remove_entry(t, 1)) == "D(3,4;3,2,5,6)"
    assert str(remove_entry(t, 3)) == "D(1,4;1,2,5,6)"
    assert str(remove_entry(t, 2)) == "D(1,3,4;1,5,6)"
    with pytest.raises(ValueError):
        remove_entry(HookTableau.standard(3, (1,)), 1)
    with pytest.raises(ValueError):
        remove_entry(t, 9)


def test_transpose_tableau():
    t = HookTableau.standard(4, (1, 2))
    assert str(transpose_tableau(2, 3, t)) == "D(1,3;1,2,4)"
    assert str(transpose_tableau(4, 7, t)) == "D(1,2;1,3,7)"
    with pytest.raises(ValueError):
        transpose_tableau(2, 2, t)


def test_strict_partition_allows_trailing_zero():
    assert StrictPartition((2, 0)).parts == (2, 0)
    with pytest.raises(ValueError):
        StrictPartition((1, 1))


def test_strict_partition_enumeration():
    assert [p.parts for p in strict_partitions(1, 2, 2)] == [(1, 0)]
    assert [p.parts for p in strict_partitions(3, 3, 2)] == [(3, 0), (2, 1)]
    assert [p.parts for p in strict_partitions_bounded(3, 2)] == [(1, 0), (2, 0), (3, 0), (2, 1), (3, 1), (3, 2)]
    assert [p.parts for p in strict_partitions_bounded(1, 2)] == [(1, 0)]
    assert strict_partitions_bounded(5, 0)[0].parts == ()


def test_counts():
    assert count_p(0, 5, 0) == 1
    assert count_p(5, 3, 0) == 0
    assert count_p(3, 3, 2) == 2
    assert count_q(3, 3, 2) == 1  # only (3, 0) uses the top part
    assert count_q(0, 0, 1) == count_p(0, 0, 1) == 1
    for t in range(6):
        for u in range(4):
            assert sum(count_p(s, t, u) for s in range(30)) == comb(t + 1, u)
