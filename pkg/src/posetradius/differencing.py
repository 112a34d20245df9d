"""Differencing method for posets over the four-valued algebra {0, 1, -1, i}.

A column is stored as two bitplanes over its rows: ``plus`` (bit set for
entries 1 and i) and ``minus`` (bit set for -1 and i). With that encoding

* associating is ``(p1 | p2, m1 | m2)``;
* differencing is ``(p1 | m2, m1 | p2)``, i.e. associate with the sign-swapped operand.

When a column is built from adjacency vectors the plus plane is exactly the
ideal of its primary set and the minus plane the ideal of its secondary set,
so an i entry marks a row in both ideals.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from enum import IntEnum
from itertools import product
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from .errors import (
    EmptyMatrix,
    InputError,
    LengthMismatch,
    OverlappingCommitments,
    TooFewColumns,
    TooManyMaximal,
)
from .partition import min_discrepancy
from .poset import Poset, _bits

BRUTE_MAXIMAL_LIMIT = 24
BOUND_CKK_BUDGET = 5_000


class Entry(IntEnum):
    """One of 0, 1, -1, i; the integer value is the (minus, plus) bit pair."""

    ZERO = 0
    PLUS = 1
    MINUS = 2
    IMAG = 3

    def __str__(self) -> str:
        return _ENTRY_TEXT[self]

    @classmethod
    def parse(cls, token) -> "Entry":
        key = str(token).strip()
        try:
            return _ENTRY_FROM_TEXT[key]
        except KeyError:
            raise InputError(f"unknown entry {token!r}; expected 0, 1, -1 or i") from None


_ENTRY_TEXT = {Entry.ZERO: "0", Entry.PLUS: "1", Entry.MINUS: "-1", Entry.IMAG: "i"}
_ENTRY_FROM_TEXT = {"0": Entry.ZERO, "1": Entry.PLUS, "-1": Entry.MINUS, "i": Entry.IMAG}


def _negate(x: int) -> int:
    return ((x & 1) << 1) | (x >> 1 & 1)


def entry_assoc(x: Entry, y: Entry) -> Entry:
    return Entry(x | y)


def entry_diff(x: Entry, y: Entry) -> Entry:
    return Entry(x | _negate(y))


@dataclass(frozen=True)
class EVector:
    """A column over {0, 1, -1, i} with the maximal elements it commits.

    ``pri`` and ``sec`` hold the labels committed to the primary and
    secondary set by the expression this vector stands for.
    """

    plus: int
    minus: int
    length: int
    pri: frozenset = frozenset()
    sec: frozenset = frozenset()

    def __post_init__(self):
        full = (1 << self.length) - 1
        if (self.plus | self.minus) & ~full:
            raise LengthMismatch("bitplanes exceed vector length")
        if self.pri & self.sec:
            raise OverlappingCommitments(f"labels {sorted(self.pri & self.sec)} on both sides")

    @classmethod
    def from_entries(cls, entries: Iterable, pri: Iterable = (), sec: Iterable = ()) -> "EVector":
        plus = minus = 0
        entries = [e if isinstance(e, Entry) else Entry.parse(e) for e in entries]
        for k, e in enumerate(entries):
            if e & 1:
                plus |= 1 << k
            if e & 2:
                minus |= 1 << k
        return cls(plus, minus, len(entries), frozenset(pri), frozenset(sec))

    @classmethod
    def adjacency(cls, P: Poset, x: int) -> "EVector":
        """Indicator of the ideal below ``x``, committing ``x`` to the primary set."""
        P._check(x)
        return cls(P.down[x - 1], 0, P.n, frozenset({x}), frozenset())

    @property
    def entries(self) -> tuple[Entry, ...]:
        return tuple(
            Entry((self.plus >> k & 1) | (self.minus >> k & 1) << 1) for k in range(self.length)
        )

    def __getitem__(self, k: int) -> Entry:
        return self.entries[k]

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.entries)) + ")"


def _check_pair(v: EVector, w: EVector) -> None:
    if v.length != w.length:
        raise LengthMismatch(f"vector lengths {v.length} and {w.length} differ")
    if (v.pri | v.sec) & (w.pri | w.sec):
        raise OverlappingCommitments("the two expressions share a maximal element")


def vec_assoc(v: EVector, w: EVector) -> EVector:
    _check_pair(v, w)
    return EVector(v.plus | w.plus, v.minus | w.minus, v.length, v.pri | w.pri, v.sec | w.sec)


def vec_diff(v: EVector, w: EVector) -> EVector:
    _check_pair(v, w)
    return EVector(v.plus | w.minus, v.minus | w.plus, v.length, v.pri | w.sec, v.sec | w.pri)


def entry_sum(v: EVector) -> tuple[int, int]:
    """Sum of entries with i treated as the imaginary unit: ``(re, im)``."""
    both = v.plus & v.minus
    return (v.plus & ~both).bit_count() - (v.minus & ~both).bit_count(), both.bit_count()


def vector_discordancy(v: EVector) -> int:
    re, im = entry_sum(v)
    return abs(re) + im


@dataclass(frozen=True)
class NumberMatrix:
    """A pair ``(alpha, M)``: ``alpha`` rows already absorbed into i, and the remaining columns."""

    alpha: int
    columns: tuple[EVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        if len({c.length for c in self.columns}) > 1:
            raise LengthMismatch("columns of a number-matrix must share one length")
        if self.alpha < 0:
            raise InputError("alpha must be non-negative")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], alpha: int = 0, labels: Optional[Sequence] = None) -> "NumberMatrix":
        """Build from row-major entries; column ``j`` commits ``labels[j]`` (default ``j+1``)."""
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise LengthMismatch("ragged matrix")
        labels = list(labels) if labels is not None else list(range(1, ncols + 1))
        cols = [
            EVector.from_entries([r[j] for r in rows], pri={labels[j]})
            for j in range(ncols)
        ]
        return cls(alpha, tuple(cols))

    @property
    def nrows(self) -> int:
        return self.columns[0].length if self.columns else 0

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def rows(self) -> list[list[Entry]]:
        cols = [c.entries for c in self.columns]
        return [[c[k] for c in cols] for k in range(self.nrows)]

    def nonnull_rows(self) -> int:
        used = 0
        for c in self.columns:
            used |= c.plus | c.minus
        return used.bit_count()

    def is_compact(self) -> bool:
        return not any(c.plus & c.minus for c in self.columns)

    def __str__(self) -> str:
        body = "\n".join(" ".join(f"{str(e):>2}" for e in row) for row in self.rows())
        return f"{self.alpha}\n{body}" if self.alpha else body


def _compress(mask: int, keep: list[int]) -> int:
    out = 0
    for new, old in enumerate(keep):
        if mask >> old & 1:
            out |= 1 << new
    return out


def compact(m: NumberMatrix) -> NumberMatrix:
    """Delete every row holding an i in some column and count it into alpha."""
    imag = 0
    for c in m.columns:
        imag |= c.plus & c.minus
    if not imag:
        return m
    keep = [k for k in range(m.nrows) if not imag >> k & 1]
    cols = tuple(
        EVector(_compress(c.plus, keep), _compress(c.minus, keep), len(keep), c.pri, c.sec)
        for c in m.columns
    )
    return NumberMatrix(m.alpha + imag.bit_count(), cols)


def radius_matrix(P: Poset) -> NumberMatrix:
    """Adjacency vectors of the maximal elements, in ascending element order."""
    return NumberMatrix(0, tuple(EVector.adjacency(P, x) for x in P.maximal()))


# -- search internals ---------------------------------------------------------
# a raw column is (plus, minus, pri_mask, sec_mask); commitment masks index root labels


def _raw_disc(p: int, m: int) -> int:
    both = p & m
    return abs((p & ~both).bit_count() - (m & ~both).bit_count()) + both.bit_count()


def _pldm(cols: Sequence[tuple]) -> tuple[int, int]:
    j = max(range(len(cols)), key=lambda c: (_raw_disc(cols[c][0], cols[c][1]), -c))
    pj, mj = cols[j][0], cols[j][1]
    k = min(
        (c for c in range(len(cols)) if c != j),
        key=lambda c: (_raw_disc(pj | cols[c][1], mj | cols[c][0]), c),
    )
    return j, k


def pldm_select(m: NumberMatrix) -> tuple[int, int]:
    """Column of largest discordancy, then the partner minimising the discordancy of their difference.

    Indices are 0-based; ties go to the lowest index.
    """
    if m.ncols < 2:
        raise TooFewColumns("need at least two columns to choose a pair")
    return _pldm([(c.plus, c.minus) for c in m.columns])


def _ceil_parity(value: int, parity: int) -> int:
    return value + ((value - parity) & 1)


def _sound_bound(cols: Sequence[tuple]) -> int:
    """Lower bound on the minimum discordancy of a compact (i-free) column list.

    With ``a``/``b`` the number of rows inside either side's ideal and
    ``n`` the non-null rows, any completion has discordancy ``2 max(a, b) - n``.
    Two relaxations of ``max(a, b)`` are used:

    * a side contains every row of any single part (plus or minus plane)
      assigned to it;
    * weighting each row by ``1/t`` (``t`` = columns touching it) gives
      per-part weights whose side totals under-count ``a`` and ``b`` and
      sum to ``n``, which turns the bound into a classic partition over the
      signed part weights. Without shared rows this is the plain
      column-sum partition.
    """
    used = 0
    for p, m, _, _ in cols:
        used |= p | m
    n = used.bit_count()
    if n == 0:
        return 0
    dominant = 2 * max(max(p.bit_count(), m.bit_count()) for p, m, _, _ in cols) - n

    touch: dict[int, int] = {}
    for p, m, _, _ in cols:
        for k in _bits(p | m):
            touch[k] = touch.get(k, 0) + 1
    scale = math.lcm(*set(touch.values()))
    weights = []
    for p, m, _, _ in cols:
        w = sum(scale // touch[k] for k in _bits(p)) - sum(scale // touch[k] for k in _bits(m))
        weights.append(w)
    delta, _ = min_discrepancy(weights, node_budget=BOUND_CKK_BUDGET)
    fractional = -(-delta // scale)
    return max(0, dominant, fractional)


def _column_sum_bound(cols: Sequence[tuple]) -> int:
    """Partition bound over the column entry sums, valid only when supports are disjoint."""
    sums = [p.bit_count() - m.bit_count() for p, m, _, _ in cols]
    return min_discrepancy(sums, node_budget=BOUND_CKK_BUDGET)[0]


@dataclass(frozen=True)
class PartitionOutcome:
    primary_set: frozenset
    secondary_set: frozenset
    discordancy: int
    radius: Optional[int]
    optimal: bool
    nodes_expanded: int = 0
    nodes_pruned: int = 0
    strategy: str = "differencing"
    trace: tuple[str, ...] = field(default=(), compare=False, repr=False)


Selector = Union[str, random.Random, Callable[[Sequence[tuple]], tuple[int, int]]]


class _Budget(Exception):
    pass


class _Search:
    def __init__(self, labels, parity, node_budget, time_budget_ms, on_improve, prune, bound, select, trace):
        self.labels = labels
        self.parity = parity
        self.node_budget = node_budget
        self.deadline = None if time_budget_ms is None else time.monotonic() + time_budget_ms / 1000
        self.on_improve = on_improve
        self.prune = prune
        self.bound = _sound_bound if bound == "sound" else _column_sum_bound
        self.trace = trace
        if select == "pldm":
            self.select = _pldm
        elif select == "first":
            self.select = lambda cols: (0, 1)
        elif isinstance(select, random.Random):
            self.select = lambda cols: tuple(select.sample(range(len(cols)), 2))
        elif callable(select):
            self.select = select
        else:
            raise InputError(f"unknown column selector {select!r}")
        self.best: Optional[int] = None
        self.best_commit = (0, 0)
        self.nodes = 0
        self.pruned = 0

    def _dump(self, depth, alpha, cols, live, op):
        if self.trace is None:
            return
        rows = list(_bits(live))
        text = " ".join(
            "(" + ",".join(str(Entry((p >> r & 1) | (m >> r & 1) << 1)) for r in rows) + ")"
            for p, m, _, _ in cols
        )
        self.trace.append(f"{'  ' * depth}{alpha} [{text}] op={op}")

    def offer(self, value: int, pri: int, sec: int) -> bool:
        if self.best is None or value < self.best:
            self.best = value
            self.best_commit = (pri, sec)
            if self.on_improve is not None:
                self.on_improve(value, mask_to_labels(pri, self.labels), mask_to_labels(sec, self.labels))
        return self.best <= self.parity

    def search(self, alpha: int, cols: list, live: int, depth: int = 0, op: str = "root") -> bool:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise _Budget
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Budget
        self._dump(depth, alpha, cols, live, op)
        if len(cols) == 1:
            p, m, pri, sec = cols[0]
            return self.offer(alpha + abs(p.bit_count() - m.bit_count()), pri, sec)
        j, k = self.select(cols)
        v, w = cols[j], cols[k]
        lo, hi = min(j, k), max(j, k)
        for op, combined in (
            ("⊖", (v[0] | w[1], v[1] | w[0], v[2] | w[3], v[3] | w[2])),
            ("⊕", (v[0] | w[0], v[1] | w[1], v[2] | w[2], v[3] | w[3])),
        ):
            imag = combined[0] & combined[1]
            keep = ~imag
            child = []
            for c, col in enumerate(cols):
                if c == hi:
                    continue
                src = combined if c == lo else col
                child.append((src[0] & keep, src[1] & keep, src[2], src[3]))
            child_alpha = alpha + imag.bit_count()
            if self.prune and self.best is not None:
                lower = _ceil_parity(child_alpha + self.bound(child), self.parity)
                if lower >= self.best:
                    self.pruned += 1
                    if self.trace is not None:
                        self.trace.append(f"{'  ' * (depth + 1)}pruned op={op} bound={lower}")
                    continue
            if self.search(child_alpha, child, live & keep, depth + 1, op):
                return True
        return False


def mask_to_labels(mask: int, labels: Sequence) -> frozenset:
    return frozenset(labels[b] for b in _bits(mask))


def min_discordancy(
    m: NumberMatrix,
    node_budget: Optional[int] = None,
    time_budget_ms: Optional[float] = None,
    on_improve: Optional[Callable] = None,
    prune: bool = True,
    bound: str = "sound",
    select: Selector = "pldm",
    trace: Optional[list] = None,
) -> PartitionOutcome:
    """Exact minimum discordancy of a number-matrix by depth-first branch and bound.

    The difference branch is explored before the association branch and the
    matrix is compacted after every operation. ``bound="sound"`` prunes with
    :func:`_sound_bound`; ``bound="column-sum"`` uses the partition of plain
    column entry sums, which can cut off the optimum when column supports
    overlap and is kept only for comparison. ``on_improve(value, primary,
    secondary)`` fires on each better terminal. The returned radius is None;
    see :func:`packing_radius_matrix`.
    """
    if m.ncols == 0:
        raise EmptyMatrix("number-matrix has no columns")
    if bound not in ("sound", "column-sum"):
        raise InputError(f"unknown bound {bound!r}")
    labels: list = []
    index = {}
    for c in m.columns:
        for lab in sorted(c.pri | c.sec, key=repr):
            if lab in index:
                raise OverlappingCommitments(f"label {lab!r} committed by two columns")
            index[lab] = len(labels)
            labels.append(lab)

    def commit(labs):
        out = 0
        for lab in labs:
            out |= 1 << index[lab]
        return out

    start = compact(m)
    cols = [(c.plus, c.minus, commit(c.pri), commit(c.sec)) for c in start.columns]
    live = 0
    for c in start.columns:
        live |= c.plus | c.minus
    parity = (start.alpha + live.bit_count()) % 2
    search = _Search(labels, parity, node_budget, time_budget_ms, on_improve, prune, bound, select, trace)
    optimal = True
    try:
        search.search(start.alpha, cols, live)
    except _Budget:
        if search.best is None:
            # finish one greedy dive so a partition is always returned
            greedy = _Search(labels, parity, None, None, None, False, bound, "pldm", None)
            _dive(greedy, start.alpha, cols)
            search.best, search.best_commit = greedy.best, greedy.best_commit
        optimal = search.best <= parity
    pri, sec = search.best_commit
    return PartitionOutcome(
        mask_to_labels(pri, labels),
        mask_to_labels(sec, labels),
        search.best,
        None,
        optimal,
        search.nodes,
        search.pruned,
        "differencing",
        tuple(trace) if trace is not None else (),
    )


def _dive(search: _Search, alpha: int, cols: list) -> None:
    while len(cols) > 1:
        j, k = _pldm(cols)
        v, w = cols[j], cols[k]
        combined = (v[0] | w[1], v[1] | w[0], v[2] | w[3], v[3] | w[2])
        imag = combined[0] & combined[1]
        alpha += imag.bit_count()
        rest = [c for i, c in enumerate(cols) if i not in (j, k)]
        cols = [(c[0] & ~imag, c[1] & ~imag, c[2], c[3]) for c in [combined] + rest]
    p, m, pri, sec = cols[0]
    search.offer(alpha + abs(p.bit_count() - m.bit_count()), pri, sec)


def packing_radius_matrix(m: NumberMatrix, **search_options) -> PartitionOutcome:
    """``R(M) = n/2 + Lambda*/2 - 1`` with ``n`` = alpha + non-null rows."""
    outcome = min_discordancy(m, **search_options)
    n = m.alpha + m.nonnull_rows()
    if (n + outcome.discordancy) % 2:
        raise AssertionError("discordancy parity differs from row count parity")
    return PartitionOutcome(
        outcome.primary_set,
        outcome.secondary_set,
        outcome.discordancy,
        (n + outcome.discordancy) // 2 - 1,
        outcome.optimal,
        outcome.nodes_expanded,
        outcome.nodes_pruned,
        outcome.strategy,
        outcome.trace,
    )


def enumerate_partitions(P: Poset) -> Iterator[tuple[frozenset, frozenset, int, int]]:
    """Every split of the maximal elements with the first maximal element on side A.

    Yields ``(A, B, discordancy, max_weight)`` computed directly from ideals.
    """
    maxima = P.maximal()
    if len(maxima) > BRUTE_MAXIMAL_LIMIT:
        raise TooManyMaximal(f"{len(maxima)} maximal elements exceed {BRUTE_MAXIMAL_LIMIT}")
    first, rest = maxima[0], maxima[1:]
    for choice in product((0, 1), repeat=len(rest)):
        A = frozenset([first] + [x for x, c in zip(rest, choice) if not c])
        B = frozenset(x for x, c in zip(rest, choice) if c)
        ia = P.ideal_mask(P.to_mask(A))
        ib = P.ideal_mask(P.to_mask(B))
        wa, wb = ia.bit_count(), ib.bit_count()
        yield A, B, abs(wa - wb) + (ia & ib).bit_count(), max(wa, wb)


def brute_min_discordancy(P: Poset) -> PartitionOutcome:
    """Minimum discordancy over all partitions of the maximal elements."""
    best = None
    for A, B, lam, _ in enumerate_partitions(P):
        if best is None or lam < best[2]:
            best = (A, B, lam)
    A, B, lam = best
    count = 1 << (len(P.maximal()) - 1)
    return PartitionOutcome(A, B, lam, (P.n + lam) // 2 - 1, True, count, 0, "brute")
