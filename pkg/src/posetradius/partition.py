"""Two-way number partitioning: KK/LDM heuristic, complete anytime CKK, brute force.

Indices are 0-based positions in the input list. During the search every
list item carries the signed set of original indices it stands for: an
index ``i`` on the item's own side is stored as ``i``, one on the opposite
side as ``~i``. Differencing flips the second operand's members, summing
keeps them.
"""

from __future__ import annotations

import time
from bisect import insort
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import EmptyList, IndexOutOfRange, InputError, TooLarge

BRUTE_LIMIT = 24

# (-value, key, members); sorting ascending gives descending value, ties by lowest index
_Item = tuple[int, int, tuple[int, ...]]


@dataclass(frozen=True)
class ClassicPartitionResult:
    values: tuple[int, ...]
    block1: tuple[int, ...]
    block2: tuple[int, ...]
    discrepancy: int
    optimal: bool
    nodes_expanded: int = 0
    trace: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def block_values(self) -> tuple[list[int], list[int]]:
        return [self.values[i] for i in self.block1], [self.values[i] for i in self.block2]


def _validate(S: Sequence[int]) -> tuple[int, ...]:
    values = tuple(int(x) for x in S)
    if not values:
        raise EmptyList("cannot partition an empty list")
    if any(x < 1 for x in values):
        raise InputError("partition values must be positive integers")
    return values


def discrepancy(S: Sequence[int], block1: Iterable[int]) -> int:
    """``|sum(block1) - sum(rest)|`` for a set of 0-based indices."""
    block = set(block1)
    if any(not 0 <= i < len(S) for i in block):
        raise IndexOutOfRange(f"block index outside 0..{len(S) - 1}")
    inside = sum(S[i] for i in block)
    return abs(2 * inside - sum(S))


def _result(values, members, value, optimal, nodes=0, trace=()) -> ClassicPartitionResult:
    plus = sorted(m for m in members if m >= 0)
    minus = sorted(~m for m in members if m < 0)
    if 0 in minus:
        plus, minus = minus, plus
    assert discrepancy(values, plus) == value
    return ClassicPartitionResult(values, tuple(plus), tuple(minus), value, optimal, nodes, trace)


def _initial_items(values: Sequence[int]) -> list[_Item]:
    return sorted((-v, i, (i,)) for i, v in enumerate(values))


def _flip(members: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(~m for m in members)


def _difference(a: _Item, b: _Item) -> _Item:
    return (-(-a[0] - -b[0]), min(a[1], b[1]), a[2] + _flip(b[2]))


def _sum(a: _Item, b: _Item) -> _Item:
    return (a[0] + b[0], min(a[1], b[1]), a[2] + b[2])


def _kk(items: list[_Item]) -> tuple[int, tuple[int, ...], list[tuple[int, ...]]]:
    items = list(items)
    trace = [tuple(-it[0] for it in items)]
    while len(items) > 1:
        a, b = items[0], items[1]
        del items[:2]
        insort(items, _difference(a, b))
        trace.append(tuple(-it[0] for it in items))
    return -items[0][0], items[0][2], trace


def kk_ldm(S: Sequence[int]) -> ClassicPartitionResult:
    """Karmarkar-Karp differencing with the largest-two choice."""
    values = _validate(S)
    value, members, trace = _kk(_initial_items(values))
    optimal = len(values) <= 4 or value == sum(values) % 2
    return _result(values, members, value, optimal, 0, tuple(trace))


class _BudgetExhausted(Exception):
    pass


class _CKKSearch:
    def __init__(self, values, node_budget, time_budget_ms, on_improve, rules):
        self.values = values
        self.floor = sum(values) % 2
        self.node_budget = node_budget
        self.deadline = None if time_budget_ms is None else time.monotonic() + time_budget_ms / 1000
        self.on_improve = on_improve
        self.rules = rules
        self.best = None
        self.best_members: tuple[int, ...] = ()
        self.nodes = 0

    def offer(self, value: int, members: tuple[int, ...]) -> bool:
        """Record a complete partition; True when it is provably optimal."""
        if self.best is None or value < self.best:
            self.best = value
            self.best_members = members
            if self.on_improve is not None:
                self.on_improve(value, self.nodes)
        return self.best <= self.floor

    def _terminal(self, items: list[_Item]):
        """Close a node directly when one of the small-instance rules applies."""
        vals = [-it[0] for it in items]
        if len(items) == 1:
            return vals[0], items[0][2]
        if not self.rules:
            return None
        rest = sum(vals) - vals[0]
        if vals[0] >= rest:
            members = items[0][2] + tuple(m for it in items[1:] for m in _flip(it[2]))
            return vals[0] - rest, members
        if len(items) == 3:
            return rest - vals[0], items[0][2] + _flip(items[1][2]) + _flip(items[2][2])
        if len(items) == 4:
            value, members, _ = _kk(items)
            return value, members
        if len(items) == 5:
            value, members, _ = _kk(items)
            top = vals[0] + vals[1]
            alt = abs(top - (rest - vals[1]))
            if alt < value:
                members = items[0][2] + items[1][2] + tuple(
                    m for it in items[2:] for m in _flip(it[2])
                )
                value = alt
            return value, members
        return None

    def search(self, items: list[_Item]) -> bool:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise _BudgetExhausted
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _BudgetExhausted
        closed = self._terminal(items)
        if closed is not None:
            return self.offer(*closed)
        a, b = items[0], items[1]
        rest = items[2:]
        left = list(rest)
        insort(left, _difference(a, b))
        if self.search(left):
            return True
        right = list(rest)
        insort(right, _sum(a, b))
        return self.search(right)


def ckk(
    S: Sequence[int],
    node_budget: Optional[int] = None,
    time_budget_ms: Optional[float] = None,
    on_improve: Optional[Callable[[int, int], None]] = None,
    rules: bool = True,
) -> ClassicPartitionResult:
    """Complete Karmarkar-Karp: exact when the budget is not exhausted.

    Depth-first over the differencing (left) / summing (right) tree with the
    largest-two choice. ``rules`` toggles the dominant-element, 3-, 4- and
    5-element closures; the perfect-partition exit is always on.
    ``on_improve(value, nodes)`` fires on every strictly better incumbent.
    """
    values = _validate(S)
    search = _CKKSearch(values, node_budget, time_budget_ms, on_improve, rules)
    optimal = True
    try:
        search.search(_initial_items(values))
    except _BudgetExhausted:
        if search.best is None:
            value, members, _ = _kk(_initial_items(values))
            search.offer(value, members)
        optimal = search.best <= search.floor
    return _result(values, search.best_members, search.best, optimal, search.nodes)


def brute_partition(S: Sequence[int]) -> ClassicPartitionResult:
    """Exact optimum by enumerating all subsets with index 0 fixed in block 1."""
    values = _validate(S)
    if len(values) > BRUTE_LIMIT:
        raise TooLarge(f"brute force limited to {BRUTE_LIMIT} values, got {len(values)}")
    sums = np.zeros(1, dtype=np.int64)
    for v in values[1:]:
        sums = np.concatenate([sums, sums + v])
    total = sum(values)
    disc = np.abs(total - 2 * sums)
    mask = int(np.argmin(disc))
    block2 = tuple(i + 1 for i in range(len(values) - 1) if mask >> i & 1)
    block1 = tuple(i for i in range(len(values)) if i not in block2)
    return ClassicPartitionResult(values, block1, block2, int(disc[mask]), True, 1 << (len(values) - 1))


def min_discrepancy(S: Sequence[int], node_budget: Optional[int] = None) -> tuple[int, bool]:
    """Optimal discrepancy of a list that may hold zeros or negatives (signs are free).

    Returns ``(value, exact)``; when the budget runs out the value is the
    trivial lower bound ``max(parity, largest - rest)`` instead.
    """
    vals = [abs(int(x)) for x in S if x]
    if not vals:
        return 0, True
    res = ckk(vals, node_budget=node_budget)
    if res.optimal:
        return res.discrepancy, True
    top = max(vals)
    return max(sum(vals) % 2, 2 * top - sum(vals)), False
