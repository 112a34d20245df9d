from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posetradius.errors import EmptyList, IndexOutOfRange, InputError, TooLarge
from posetradius.partition import brute_partition, ckk, discrepancy, kk_ldm, min_discrepancy

lists = st.lists(st.integers(1, 60), min_size=1, max_size=11)


def check_result(res):
    assert sorted(res.block1 + res.block2) == list(range(len(res.values)))
    assert 0 in res.block1
    assert discrepancy(res.values, res.block1) == res.discrepancy


def test_discrepancy():
    assert discrepancy([8, 7, 6, 5, 4], [0, 1]) == 0
    assert discrepancy([8, 7, 6, 5, 4], [0, 2]) == 2
    assert discrepancy([3], []) == 3
    with pytest.raises(IndexOutOfRange):
        discrepancy([1, 2], [2])


def test_kk_worked_example():
    res = kk_ldm([8, 7, 6, 5, 4])
    assert res.discrepancy == 2
    assert res.trace[1:] == ((6, 5, 4, 1), (4, 1, 1), (3, 1), (2,))
    assert not res.optimal
    check_result(res)


def test_kk_small_lists_are_optimal():
    assert kk_ldm([5, 4, 3]).discrepancy == 2
    assert kk_ldm([5, 4, 3]).optimal
    assert kk_ldm([7]).discrepancy == 7
    assert kk_ldm([6, 5, 3, 2, 2]).optimal  # perfect result


def test_ckk_worked_example():
    res = ckk([8, 7, 6, 5, 4])
    assert res.discrepancy == 0 and res.optimal
    assert sorted(res.block_values()[0]) in ([7, 8], [4, 5, 6])
    check_result(res)


def test_rejects_bad_input():
    with pytest.raises(EmptyList):
        ckk([])
    with pytest.raises(InputError):
        kk_ldm([3, 0])
    with pytest.raises(TooLarge):
        brute_partition([1] * 30)


@given(lists)
def test_ckk_matches_brute_force(S):
    expected = brute_partition(S).discrepancy
    for rules in (True, False):
        res = ckk(S, rules=rules)
        assert res.optimal and res.discrepancy == expected
        check_result(res)


@given(lists)
def test_kk_never_beats_optimum(S):
    res = kk_ldm(S)
    check_result(res)
    assert res.discrepancy >= brute_partition(S).discrepancy
    assert res.discrepancy % 2 == sum(S) % 2


def test_perfect_partition_exits_early():
    S = [10, 9, 8, 7, 6, 5, 4, 3]
    res = ckk(S)
    assert res.discrepancy == sum(S) % 2
    assert res.nodes_expanded < 2 ** (len(S) - 1)


@settings(max_examples=40)
@given(st.lists(st.integers(1, 10**6), min_size=12, max_size=16))
def test_budget_and_anytime(S):
    seen = []
    res = ckk(S, node_budget=5, on_improve=lambda value, nodes: seen.append(value))
    check_result(res)
    assert seen == sorted(seen, reverse=True) and len(set(seen)) == len(seen)
    assert seen[-1] == res.discrepancy
    if not res.optimal:
        assert res.discrepancy > sum(S) % 2


def test_time_budget():
    S = [2**40 + 7 * i * i for i in range(40)]
    res = ckk(S, time_budget_ms=5)
    check_result(res)


def test_min_discrepancy_signed_lists():
    assert min_discrepancy([3, -3, 0]) == (0, True)
    assert min_discrepancy([5, -4, 3]) == (2, True)
    assert min_discrepancy([0, 0]) == (0, True)
