"""Finite posets on ``{1..n}`` stored as down-set bitmasks.

Element labels are 1-based everywhere in the public API. Internally the
relation is kept as ``down[j]``: an integer whose bit ``i`` is set when
``i+1 <= j+1`` in the order (0-based bit positions). Ideals, weights and
maximal-element queries are then OR/POPCOUNT over those words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CycleError, EmptyIdeal, NotAPartialOrder, RangeError

ElementSet = frozenset


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_set(mask: int) -> frozenset[int]:
    """Convert a 0-based bitmask into a 1-based element set."""
    return frozenset(b + 1 for b in _bits(mask))


@dataclass(frozen=True)
class Classification:
    is_chain: bool
    is_antichain: bool
    is_hierarchical: bool
    has_disjoint_maximal_ideals: bool


@dataclass(frozen=True)
class Poset:
    """A partial order on ``{1..n}``.

    ``down[j]`` is the bitmask of the principal ideal of element ``j+1``.
    Construct through :func:`poset_from_cover_relations` or
    :func:`poset_from_adjacency_matrix` rather than directly.
    """

    n: int
    down: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.down) != self.n:
            raise NotAPartialOrder("poset needs n >= 1 and one down-set per element")

    # -- element-level queries -------------------------------------------
    def leq(self, a: int, b: int) -> bool:
        """``a <= b`` in the order (1-based)."""
        self._check(a)
        self._check(b)
        return bool(self.down[b - 1] >> (a - 1) & 1)

    def _check(self, x: int) -> None:
        if not 1 <= x <= self.n:
            raise RangeError(f"element {x} outside 1..{self.n}")

    def to_mask(self, elements: Iterable[int]) -> int:
        mask = 0
        for x in elements:
            self._check(x)
            mask |= 1 << (x - 1)
        return mask

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def ideal_mask(self, mask: int) -> int:
        out = 0
        for b in _bits(mask):
            out |= self.down[b]
        return out

    def maximal_mask(self, mask: int) -> int:
        """Maximal elements of the subset ``mask`` (as a bitmask)."""
        out = 0
        for b in _bits(mask):
            strictly_below = 0
            for c in _bits(mask & ~(1 << b)):
                strictly_below |= self.down[c]
            if not strictly_below >> b & 1:
                out |= 1 << b
        return out

    def levels(self) -> tuple[int, ...]:
        """Length of the longest chain ending at each element (1-based values)."""
        order = sorted(range(self.n), key=lambda j: self.down[j].bit_count())
        level = [0] * self.n
        for j in order:
            below = self.down[j] & ~(1 << j)
            level[j] = 1 + max((level[i] for i in _bits(below)), default=0)
        return tuple(level)

    def adjacency_matrix(self) -> list[list[int]]:
        """``A[i][j] = 1`` iff ``i+1 <= j+1``; column ``j`` is the adjacency vector of ``j+1``."""
        return [[self.down[j] >> i & 1 for j in range(self.n)] for i in range(self.n)]

    def maximal(self) -> tuple[int, ...]:
        return tuple(sorted(mask_to_set(self.maximal_mask(self.full_mask))))

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.adjacency_matrix())


def _from_down(n: int, down: Sequence[int]) -> Poset:
    return Poset(n, tuple(down))


def poset_from_cover_relations(n: int, covers: Iterable[tuple[int, int]]) -> Poset:
    """Build the reflexive-transitive closure of a relation given as pairs ``(a, b)`` meaning ``a <= b``."""
    if n < 1:
        raise RangeError("n must be positive")
    down = [1 << j for j in range(n)]
    for a, b in covers:
        for x in (a, b):
            if not 1 <= x <= n:
                raise RangeError(f"element {x} outside 1..{n}")
        if a == b:
            raise CycleError(f"self-loop ({a}, {b}) in cover relation")
        down[b - 1] |= 1 << (a - 1)
    # Warshall over bitmasks
    for k in range(n):
        bit = 1 << k
        dk = down[k]
        for j in range(n):
            if down[j] & bit:
                down[j] |= dk
    for j in range(n):
        for i in _bits(down[j] & ~(1 << j)):
            if down[i] >> j & 1:
                raise CycleError(f"elements {i + 1} and {j + 1} lie on a directed cycle")
    return _from_down(n, down)


def poset_from_adjacency_matrix(matrix: Sequence[Sequence[int]]) -> Poset:
    """Read ``M[i][j] = [i <= j]`` and validate the three order axioms."""
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise NotAPartialOrder("adjacency matrix must be square and non-empty")
    down = [0] * n
    for i, row in enumerate(matrix):
        for j, v in enumerate(row):
            if v not in (0, 1, True, False):
                raise NotAPartialOrder(f"entry ({i + 1},{j + 1}) is not 0/1")
            if v:
                down[j] |= 1 << i
    for j in range(n):
        if not down[j] >> j & 1:
            raise NotAPartialOrder(f"not reflexive at {j + 1}")
        for i in _bits(down[j] & ~(1 << j)):
            if down[i] >> j & 1:
                raise NotAPartialOrder(f"not antisymmetric: {i + 1} and {j + 1}")
            if down[i] & ~down[j]:
                raise NotAPartialOrder(f"not transitive below {j + 1}")
    return _from_down(n, down)


def chain(n: int) -> Poset:
    return _from_down(n, [(1 << (j + 1)) - 1 for j in range(n)])


def antichain(n: int) -> Poset:
    return _from_down(n, [1 << j for j in range(n)])


def ideal(P: Poset, X: Iterable[int]) -> frozenset[int]:
    """The smallest down-closed set containing ``X``."""
    return mask_to_set(P.ideal_mask(P.to_mask(X)))


def weight_of_set(P: Poset, X: Iterable[int]) -> int:
    return P.ideal_mask(P.to_mask(X)).bit_count()


def maximal_elements(P: Poset, A: Iterable[int]) -> frozenset[int]:
    return mask_to_set(P.maximal_mask(P.to_mask(A)))


def classify(P: Poset) -> Classification:
    strict = [P.down[j] & ~(1 << j) for j in range(P.n)]
    comparable_pairs = sum(s.bit_count() for s in strict)
    is_chain = comparable_pairs == P.n * (P.n - 1) // 2
    is_antichain = comparable_pairs == 0

    level = P.levels()
    is_hier = all(
        bool(strict[j] >> i & 1) == (level[i] < level[j])
        for i in range(P.n)
        for j in range(P.n)
        if i != j
    )

    disjoint = True
    seen = 0
    for x in _bits(P.maximal_mask(P.full_mask)):
        if P.down[x] & seen:
            disjoint = False
            break
        seen |= P.down[x]
    return Classification(is_chain, is_antichain, is_hier, disjoint)


def standard_form(P: Poset) -> Poset:
    """Keep the down-sets of maximal elements and make every other element an isolated bottom.

    The radius matrix is unchanged, and every element of the result is
    either maximal or minimal.
    """
    maxmask = P.maximal_mask(P.full_mask)
    return _from_down(
        P.n, [P.down[j] if maxmask >> j & 1 else 1 << j for j in range(P.n)]
    )


def induced_ideal_subposet(P: Poset, X: Iterable[int]) -> tuple[Poset, tuple[int, ...]]:
    """Restrict ``P`` to the ideal generated by ``X``.

    Returns the subposet on ``1..|ideal|`` together with the tuple mapping
    each new label (position + 1) back to its original label. Relabelling
    keeps ascending original order.
    """
    mask = P.ideal_mask(P.to_mask(X))
    if not mask:
        raise EmptyIdeal("ideal of the empty set has no elements")
    old = list(_bits(mask))
    pos = {o: k for k, o in enumerate(old)}
    down = []
    for o in old:
        d = 0
        for i in _bits(P.down[o]):
            d |= 1 << pos[i]
        down.append(d)
    return _from_down(len(old), down), tuple(o + 1 for o in old)
