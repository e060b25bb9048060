import pytest

from logconvex.oracles import (
    BUDGETS,
    BudgetExceeded,
    enum_delannoy,
    enum_dyck,
    enum_motzkin,
    enum_partitions_by_blocks,
    enum_permutations_by_cycles,
    enum_schroeder,
    enum_secondary,
)
from logconvex.sequences import catalan, motzkin_short, narayana, sec_struct_rank1


def test_dyck_examples():
    assert enum_dyck(3) == (5, {1: 1, 2: 3, 3: 1})
    assert enum_dyck(0) == (1, {0: 1})
    count, hist = enum_dyck(9)
    assert count == catalan(9)[9] == sum(hist.values())
    assert hist == {k: narayana(9, k) for k in range(1, 10)}


def test_motzkin_examples():
    assert enum_motzkin(4) == 9
    assert enum_motzkin(0) == 1
    assert [enum_motzkin(n) for n in range(11)] == list(motzkin_short(10).values)


def test_secondary_examples():
    assert enum_secondary(1, 6) == 17
    assert enum_secondary(0, 5) == 21
    assert enum_secondary(7, 7) == 1
    assert enum_secondary(3, 0) == 1
    assert [enum_secondary(1, n) for n in range(11)] == list(sec_struct_rank1(10).values)


def test_degenerate_rank_counts_catalan_shifted():
    # Loops at single vertices are admitted, which gives C_{n+1}.
    c = catalan(10).values
    assert [enum_secondary(-1, n) for n in range(9)] == list(c[1:10])


def test_secondary_rejects_rank_below_minus_one():
    with pytest.raises(ValueError):
        enum_secondary(-2, 3)


def test_lattice_examples():
    assert enum_delannoy(2) == 13 and enum_schroeder(2) == 6
    assert enum_delannoy(0) == enum_schroeder(0) == 1
    assert enum_schroeder(1) == 2


def test_permutation_and_partition_rows():
    assert enum_permutations_by_cycles(4) == [6, 11, 6, 1]
    assert enum_partitions_by_blocks(4) == [1, 7, 6, 1]
    assert enum_permutations_by_cycles(1) == [1] == enum_partitions_by_blocks(1)
    assert sum(enum_permutations_by_cycles(6)) == 720


@pytest.mark.parametrize("fn,family", [
    (enum_dyck, "dyck"), (enum_motzkin, "motzkin"), (enum_delannoy, "delannoy"),
    (enum_schroeder, "schroeder"), (enum_permutations_by_cycles, "permutations"),
    (enum_partitions_by_blocks, "partitions"),
])
def test_budgets_are_enforced(fn, family):
    with pytest.raises(BudgetExceeded):
        fn(BUDGETS[family] + 1)


def test_budget_is_configuration():
    with pytest.raises(BudgetExceeded):
        enum_secondary(1, 5, budget=4)
    assert enum_motzkin(3, budget=3) == 4
    with pytest.raises(ValueError):
        enum_motzkin(-1)
