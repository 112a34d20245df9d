"""Packing radius of posets, vectors and linear codes.

The radius of a vector depends only on the ideal generated by its support,
so everything reduces to :func:`radius_of_poset` on an induced subposet.
Code radius is the minimum over nonzero codewords, with several sound
shortcuts that avoid solving one partition problem per codeword.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .codes import DEFAULT_CAP, FieldVector, LinearCode, enumerate_codewords, support
from .differencing import (
    Entry,
    NumberMatrix,
    PartitionOutcome,
    brute_min_discordancy,
    packing_radius_matrix,
    radius_matrix,
)
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InputError,
    NotDominated,
    NotNullRow,
    ZeroDimensionalCode,
    ZeroVector,
)
from .partition import ckk
from .poset import Poset, classify, induced_ideal_subposet

STRATEGIES = ("auto", "brute", "differencing")


def _outcome(P: Poset, A, B, lam: int, strategy: str, optimal=True, nodes=0, pruned=0) -> PartitionOutcome:
    return PartitionOutcome(
        frozenset(A), frozenset(B), lam, (P.n + lam) // 2 - 1, optimal, nodes, pruned, strategy
    )


def radius_of_poset(P: Poset, strategy: str = "auto", **search_options) -> PartitionOutcome:
    """Packing radius of a poset together with an optimum partition of its maximal elements.

    ``auto`` uses closed forms for chains, anti-chains and hierarchical
    posets, classic CKK when the maximal ideals are disjoint, and the
    differencing search otherwise. ``search_options`` go to
    :func:`~posetradius.differencing.min_discordancy`.
    """
    if strategy not in STRATEGIES:
        raise InputError(f"unknown strategy {strategy!r}")
    if strategy == "brute":
        return brute_min_discordancy(P)
    if strategy == "differencing":
        return packing_radius_matrix(radius_matrix(P), **search_options)

    info = classify(P)
    maxima = P.maximal()
    m, n = len(maxima), P.n
    if info.is_chain:
        return _outcome(P, maxima, (), n, "chain")
    if info.is_antichain:
        return _outcome(P, maxima[0::2], maxima[1::2], n % 2, "antichain")
    if info.is_hierarchical:
        half = (m + 1) // 2
        lam = n if m == 1 else m % 2 + (n - m)
        return _outcome(P, maxima[:half], maxima[half:], lam, "hierarchical")
    if info.has_disjoint_maximal_ideals:
        weights = [P.down[x - 1].bit_count() for x in maxima]
        res = ckk(
            weights,
            node_budget=search_options.get("node_budget"),
            time_budget_ms=search_options.get("time_budget_ms"),
        )
        return _outcome(
            P,
            [maxima[i] for i in res.block1],
            [maxima[i] for i in res.block2],
            res.discrepancy,
            "disjoint-ideals",
            res.optimal,
            res.nodes_expanded,
        )
    return packing_radius_matrix(radius_matrix(P), **search_options)


def hierarchical_radius(n: int, m: int) -> int:
    """Closed form ``n + [m odd]/2 - m/2 - 1`` for a hierarchical poset with ``m`` maxima."""
    return n - m // 2 - 1


def radius_of_vector(P: Poset, v: FieldVector, strategy: str = "auto", **search_options) -> PartitionOutcome:
    """Packing radius of ``v``: the radius of the subposet on the ideal of its support.

    The partition is reported in the original element labels.
    """
    if len(v) != P.n:
        raise InputError(f"vector length {len(v)} != poset size {P.n}")
    if v.is_zero():
        raise ZeroVector("packing radius undefined for 0")
    sub, labels = induced_ideal_subposet(P, support(v))
    out = radius_of_poset(sub, strategy, **search_options)
    relabel = lambda s: frozenset(labels[x - 1] for x in s)  # noqa: E731
    return PartitionOutcome(
        relabel(out.primary_set),
        relabel(out.secondary_set),
        out.discordancy,
        out.radius,
        out.optimal,
        out.nodes_expanded,
        out.nodes_pruned,
        out.strategy,
    )


@dataclass(frozen=True)
class PruneOptions:
    support_dedup: bool = True
    ideal_dedup: bool = True
    containment: bool = True
    size_bound: bool = True
    hierarchical: bool = True

    @classmethod
    def none(cls) -> "PruneOptions":
        return cls(False, False, False, False, False)


@dataclass(frozen=True)
class CodewordStat:
    codeword: FieldVector
    support: frozenset
    method: str
    radius: Optional[int] = None
    reason: Optional[str] = None


@dataclass(frozen=True)
class CodeRadiusResult:
    radius: int
    packing_vector: FieldVector
    minimum_distance: int
    per_codeword_stats: tuple[CodewordStat, ...] = field(repr=False)
    prune_counts: dict = field(default_factory=dict)
    optimal: bool = True

    @property
    def evaluated(self) -> int:
        return sum(1 for s in self.per_codeword_stats if s.radius is not None and s.reason is None)


def radius_of_code(
    P: Poset,
    C: LinearCode,
    options: PruneOptions = PruneOptions(),
    cap: int = DEFAULT_CAP,
    strategy: str = "auto",
    **search_options,
) -> CodeRadiusResult:
    """Minimum packing radius over the nonzero codewords, and a codeword attaining it.

    Codewords are visited by increasing ideal size. A codeword is skipped
    when another one already determines a radius no larger than its own:
    same support, same ideal, a strictly smaller ideal inside its ideal,
    or an ideal at most half its size (rounded up). For hierarchical
    posets the minimum-weight codeword decides directly.
    """
    if C.k < 1:
        raise ZeroDimensionalCode("code has dimension 0")
    if C.n != P.n:
        raise InputError(f"code length {C.n} != poset size {P.n}")
    words = [c for c in enumerate_codewords(C, cap) if not c.is_zero()]
    ideals = {id(c): P.ideal_mask(c.support_mask()) for c in words}
    d = min(m.bit_count() for m in ideals.values())
    counts = {"support_dedup": 0, "ideal_dedup": 0, "containment": 0, "size_bound": 0, "hierarchical": 0}
    stats: dict[int, CodewordStat] = {}

    def skip(c, reason, radius=None):
        counts[reason] += 1
        stats[id(c)] = CodewordStat(c, support(c), "skipped", radius, reason)

    if options.hierarchical and classify(P).is_hierarchical:
        best = min(words, key=lambda c: ideals[id(c)].bit_count())
        m = P.maximal_mask(ideals[id(best)]).bit_count()
        radius = hierarchical_radius(d, m)
        for c in words:
            if c is best:
                stats[id(c)] = CodewordStat(c, support(c), "hierarchical-formula", radius)
            else:
                skip(c, "hierarchical")
        return CodeRadiusResult(radius, best, d, tuple(stats[id(c)] for c in words), counts)

    # representatives: first codeword per support, then first per ideal
    candidates = []
    by_support: dict[int, FieldVector] = {}
    by_ideal: dict[int, FieldVector] = {}
    for c in words:
        s = c.support_mask()
        if options.support_dedup and s in by_support:
            skip(c, "support_dedup")
            continue
        by_support.setdefault(s, c)
        ideal = ideals[id(c)]
        if options.ideal_dedup and ideal in by_ideal:
            skip(c, "ideal_dedup")
            continue
        by_ideal.setdefault(ideal, c)
        candidates.append(c)
    candidates.sort(key=lambda c: ideals[id(c)].bit_count())
    all_ideals = set(ideals.values())

    best_radius = None
    best_word = None
    best_optimal = True
    smallest_evaluated = None
    for c in candidates:
        ideal = ideals[id(c)]
        size = ideal.bit_count()
        if options.containment and any(o != ideal and o & ~ideal == 0 for o in all_ideals):
            skip(c, "containment")
            continue
        if options.size_bound and smallest_evaluated is not None and smallest_evaluated <= (size + 1) // 2:
            skip(c, "size_bound")
            continue
        out = radius_of_vector(P, c, strategy, **search_options)
        stats[id(c)] = CodewordStat(c, support(c), out.strategy, out.radius)
        best_optimal &= out.optimal
        if smallest_evaluated is None or size < smallest_evaluated:
            smallest_evaluated = size
        if best_radius is None or out.radius < best_radius:
            best_radius, best_word = out.radius, c

    for c in words:
        if id(c) not in stats:
            raise AssertionError("codeword neither evaluated nor skipped")
    return CodeRadiusResult(
        best_radius, best_word, d, tuple(stats[id(c)] for c in words), counts, best_optimal
    )


# -- extended radius matrices ------------------------------------------------

EntryMatrix = tuple[tuple[Entry, ...], ...]


def entry_matrix(rows: Sequence[Sequence]) -> EntryMatrix:
    """Normalise ints (0, 1, -1), strings or :class:`Entry` values to an entry matrix."""
    out = []
    for r in rows:
        out.append(tuple(e if isinstance(e, Entry) else Entry.parse(e) for e in r))
    if len({len(r) for r in out}) > 1:
        raise DimensionMismatch("ragged matrix")
    return tuple(out)


def matrix_radius(m: Sequence[Sequence], **search_options) -> int:
    """``R(M)`` of a plain entry matrix (alpha = 0)."""
    return packing_radius_matrix(NumberMatrix.from_rows(entry_matrix(m)), **search_options).radius


def _columns(m: EntryMatrix) -> list[tuple[Entry, ...]]:
    return [tuple(r[j] for r in m) for j in range(len(m[0]) if m else 0)]


def _from_columns(cols: list[tuple[Entry, ...]], nrows: int) -> EntryMatrix:
    return tuple(tuple(c[k] for c in cols) for k in range(nrows))


def _dominated(w: Sequence[Entry], v: Sequence[Entry]) -> bool:
    """Every nonzero entry of ``w`` is repeated in ``v``: associating them gives ``v`` back."""
    return all(a == Entry.ZERO or a == b for a, b in zip(w, v))


def er_transform(m: Sequence[Sequence], op: str, *args) -> EntryMatrix:
    """Apply one radius-preserving operation to an entry matrix (0-based indices).

    ``swap-rows i j``, ``swap-cols i j``, ``add-null-row pos``,
    ``remove-null-row i``, ``add-dominated-column pos column``,
    ``remove-dominated-column j``.
    """
    m = entry_matrix(m)
    nrows = len(m)
    cols = _columns(m)

    def check(i, bound):
        if not 0 <= i < bound:
            raise IndexOutOfRange(f"index {i} outside 0..{bound - 1}")

    if op == "swap-rows":
        i, j = args
        check(i, nrows)
        check(j, nrows)
        rows = list(m)
        rows[i], rows[j] = rows[j], rows[i]
        return tuple(rows)
    if op == "swap-cols":
        i, j = args
        check(i, len(cols))
        check(j, len(cols))
        cols[i], cols[j] = cols[j], cols[i]
        return _from_columns(cols, nrows)
    if op == "add-null-row":
        (pos,) = args
        check(pos, nrows + 1)
        rows = list(m)
        rows.insert(pos, (Entry.ZERO,) * len(cols))
        return tuple(rows)
    if op == "remove-null-row":
        (i,) = args
        check(i, nrows)
        if any(e != Entry.ZERO for e in m[i]):
            raise NotNullRow(f"row {i} is not null")
        return m[:i] + m[i + 1 :]
    if op == "add-dominated-column":
        pos, column = args
        check(pos, len(cols) + 1)
        column = tuple(e if isinstance(e, Entry) else Entry.parse(e) for e in column)
        if len(column) != nrows:
            raise DimensionMismatch("column length differs from row count")
        if not any(_dominated(column, v) for v in cols):
            raise NotDominated("no existing column contains the new column")
        cols.insert(pos, column)
        return _from_columns(cols, nrows)
    if op == "remove-dominated-column":
        (j,) = args
        check(j, len(cols))
        if not any(_dominated(cols[j], v) for i, v in enumerate(cols) if i != j):
            raise NotDominated(f"column {j} is not contained in another column")
        del cols[j]
        return _from_columns(cols, nrows)
    raise InputError(f"unknown ER operation {op!r}")


class Comparison(Enum):
    LE = "LE"
    GE = "GE"
    UNKNOWN = "Unknown"


def _contained(a: EntryMatrix, b: EntryMatrix) -> bool:
    return all(x == Entry.ZERO or x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def compare_by_support(mP: Sequence[Sequence], mQ: Sequence[Sequence]) -> Comparison:
    """``LE`` when ``mP`` is ``mQ`` with some entries zeroed, so ``R(P) <= R(Q)``.

    ``GE`` for the reverse containment and ``Unknown`` otherwise. Identical
    matrices report ``LE``.
    """
    a, b = entry_matrix(mP), entry_matrix(mQ)
    if len(a) != len(b) or (a and len(a[0]) != len(b[0])):
        raise DimensionMismatch("matrices must have equal dimensions; pad with null rows/columns first")
    if _contained(a, b):
        return Comparison.LE
    if _contained(b, a):
        return Comparison.GE
    return Comparison.UNKNOWN


def pad(m: Sequence[Sequence], nrows: int, ncols: int) -> EntryMatrix:
    """Append null rows at the bottom and zero columns at the right."""
    m = entry_matrix(m)
    width = len(m[0]) if m else 0
    if nrows < len(m) or ncols < width:
        raise DimensionMismatch("cannot pad to a smaller size")
    rows = [r + (Entry.ZERO,) * (ncols - width) for r in m]
    rows += [(Entry.ZERO,) * ncols] * (nrows - len(m))
    return tuple(rows)


def _greedy_match(a: EntryMatrix, b: EntryMatrix) -> bool:
    ca, cb = _columns(a), _columns(b)
    free = list(range(len(cb)))
    for col in sorted(ca, key=lambda c: -sum(e != Entry.ZERO for e in c)):
        fits = [j for j in free if _dominated(col, cb[j])]
        if not fits:
            return False
        j = min(fits, key=lambda j: sum(e != Entry.ZERO for e in cb[j]))
        free.remove(j)
    return True


def compare_padded(mP: Sequence[Sequence], mQ: Sequence[Sequence]) -> Comparison:
    """Pad both matrices to a common size and look for a column matching by containment.

    Rows stay aligned; a failed greedy match reports ``Unknown``.
    """
    a, b = entry_matrix(mP), entry_matrix(mQ)
    nrows = max(len(a), len(b))
    ncols = max(len(a[0]) if a else 0, len(b[0]) if b else 0)
    a, b = pad(a, nrows, ncols), pad(b, nrows, ncols)
    if _greedy_match(a, b):
        return Comparison.LE
    if _greedy_match(b, a):
        return Comparison.GE
    return Comparison.UNKNOWN


def poset_er_matrix(P: Poset) -> EntryMatrix:
    """The radius matrix of ``P`` as a plain entry matrix."""
    return entry_matrix(radius_matrix(P).rows())


__all__ = [
    "CodeRadiusResult",
    "CodewordStat",
    "Comparison",
    "PruneOptions",
    "compare_by_support",
    "compare_padded",
    "entry_matrix",
    "er_transform",
    "hierarchical_radius",
    "matrix_radius",
    "pad",
    "poset_er_matrix",
    "radius_of_code",
    "radius_of_poset",
    "radius_of_vector",
]
