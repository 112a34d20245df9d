"""Brute-force ground truth for every radius quantity.

Nothing here shares code with the search engines beyond the poset and
field-vector primitives; each function follows a definition literally.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import product
from typing import Any

from .codes import FieldVector, LinearCode, enumerate_codewords, p_weight
from .differencing import PartitionOutcome, enumerate_partitions
from .errors import TooLarge, ZeroVector
from .poset import Poset

SPACE_LIMIT = 2**20


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    oracle: Any
    engine: Any
    instance: str

    @property
    def agree(self) -> bool:
        return self.oracle == self.engine

    def to_json(self) -> dict:
        out = asdict(self)
        out["agree"] = self.agree
        return out


def _space(q: int, n: int):
    if q**n > SPACE_LIMIT:
        raise TooLarge(f"q^n = {q**n} exceeds {SPACE_LIMIT}")
    return product(range(q), repeat=n)


def _weight(P: Poset, q: int, coords) -> int:
    """``w(x)`` straight from the definition: size of the ideal of the support."""
    support = 0
    for i, c in enumerate(coords):
        if c % q:
            support |= 1 << i
    return P.ideal_mask(support).bit_count()


def ball_radius_oracle(P: Poset, v: FieldVector) -> int:
    """Largest ``r`` with ``B(0, r)`` and ``B(v, r)`` disjoint, by listing both balls."""
    if v.is_zero():
        raise ZeroVector("packing radius undefined for 0")
    q = v.q
    points = [
        (x, _weight(P, q, x), _weight(P, q, [a - b for a, b in zip(x, v.coords)]))
        for x in _space(q, len(v))
    ]
    r = 0
    while True:
        ball0 = {x for x, d0, _ in points if d0 <= r}
        ballv = {x for x, _, dv in points if dv <= r}
        if ball0 & ballv:
            return r - 1
        r += 1


def maxweight_oracle(P: Poset, v: FieldVector) -> tuple[int, FieldVector]:
    """``min_x max(w(x), w(v - x)) - 1`` over all of ``F_q^n``, with a minimising ``x``."""
    q = v.q
    best = None
    for x in _space(q, len(v)):
        m = max(_weight(P, q, x), _weight(P, q, [b - a for a, b in zip(x, v.coords)]))
        if best is None or m < best[0]:
            best = (m, x)
    return best[0] - 1, FieldVector(q, best[1])


def restricted_maxweight(P: Poset, v: FieldVector) -> int:
    """Same minimum but only over ``x`` with each ``x_i`` in ``{0, v_i}``."""
    best = None
    for pick in product((0, 1), repeat=len(v)):
        x = FieldVector(v.q, tuple(c * p for c, p in zip(v.coords, pick)))
        m = max(p_weight(P, x), p_weight(P, v - x))
        best = m if best is None else min(best, m)
    return best - 1


def partition_oracle(P: Poset) -> PartitionOutcome:
    """Minimise the larger block weight over all splits of the maximal elements."""
    best = None
    count = 0
    for A, B, lam, heavier in enumerate_partitions(P):
        count += 1
        if best is None or heavier < best[3]:
            best = (A, B, lam, heavier)
    A, B, lam, heavier = best
    return PartitionOutcome(A, B, lam, heavier - 1, True, count, 0, "oracle")


def code_radius_oracle(P: Poset, C: LinearCode) -> int:
    """Minimum over nonzero codewords of :func:`ball_radius_oracle`."""
    return min(ball_radius_oracle(P, c) for c in enumerate_codewords(C) if not c.is_zero())
