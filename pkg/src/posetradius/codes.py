"""Linear codes over prime fields and poset weights of their codewords."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import CapExceeded, InputError, LengthMismatch, ModulusMismatch
from .poset import Poset

DEFAULT_CAP = 2**22


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldVector:
    q: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.q):
            raise InputError(f"q={self.q} is not prime")
        object.__setattr__(self, "coords", tuple(int(c) % self.q for c in self.coords))

    @classmethod
    def parse(cls, text: str, q: int = 2) -> "FieldVector":
        """Parse ``"001"`` (digits, q <= 10) or ``"1,0,12"``."""
        text = text.strip()
        parts = text.split(",") if "," in text else list(text)
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise InputError(f"cannot parse vector {text!r}") from None
        if any(not 0 <= v < q for v in values):
            raise InputError(f"vector {text!r} has entries outside [0, {q})")
        return cls(q, tuple(values))

    def __len__(self) -> int:
        return len(self.coords)

    def _other(self, other: "FieldVector") -> None:
        if other.q != self.q:
            raise ModulusMismatch(f"moduli {self.q} and {other.q} differ")
        if len(other) != len(self):
            raise LengthMismatch(f"lengths {len(self)} and {len(other)} differ")

    def __add__(self, other: "FieldVector") -> "FieldVector":
        self._other(other)
        return FieldVector(self.q, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "FieldVector") -> "FieldVector":
        self._other(other)
        return FieldVector(self.q, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c: int) -> "FieldVector":
        return FieldVector(self.q, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support_mask(self) -> int:
        mask = 0
        for i, c in enumerate(self.coords):
            if c:
                mask |= 1 << i
        return mask

    def __str__(self) -> str:
        if self.q <= 10:
            return "".join(map(str, self.coords))
        return ",".join(map(str, self.coords))


def zero_vector(q: int, n: int) -> FieldVector:
    return FieldVector(q, (0,) * n)


def complement(x: FieldVector, v: FieldVector) -> FieldVector:
    """``v - x``; applying it twice returns ``x``."""
    return v - x


def support(v: FieldVector) -> frozenset[int]:
    return frozenset(i + 1 for i, c in enumerate(v.coords) if c)


def p_weight(P: Poset, v: FieldVector) -> int:
    if len(v) != P.n:
        raise LengthMismatch(f"vector length {len(v)} != poset size {P.n}")
    return P.ideal_mask(v.support_mask()).bit_count()


def p_distance(P: Poset, v: FieldVector, w: FieldVector) -> int:
    return p_weight(P, v - w)


def _rank_mod_p(rows: list[list[int]], q: int) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] % q), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], q - 2, q)
        rows[rank] = [(a * inv) % q for a in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % q:
                f = rows[r][col]
                rows[r] = [(a - f * b) % q for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class LinearCode:
    """A code over ``F_q`` spanned by the rows of ``generator`` (full row rank)."""

    q: int
    generator: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.q):
            raise InputError(f"q={self.q} is not prime (prime fields only)")
        rows = tuple(tuple(int(a) for a in row) for row in self.generator)
        if rows and len({len(r) for r in rows}) != 1:
            raise LengthMismatch("generator rows have different lengths")
        if any(not 0 <= a < self.q for r in rows for a in r):
            raise InputError(f"generator entries must lie in [0, {self.q})")
        if rows and _rank_mod_p([list(r) for r in rows], self.q) != len(rows):
            raise InputError("generator rows are linearly dependent")
        object.__setattr__(self, "generator", rows)

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def n(self) -> int:
        return len(self.generator[0]) if self.generator else 0

    @property
    def size(self) -> int:
        return self.q**self.k


def enumerate_codewords(C: LinearCode, cap: int = DEFAULT_CAP) -> Iterator[FieldVector]:
    """Yield every codeword once, zero first, by counting over message vectors."""
    if C.size > cap:
        raise CapExceeded(C.size, cap)
    q, n, G = C.q, C.n, C.generator
    for msg in product(range(q), repeat=C.k):
        word = [0] * n
        for m, row in zip(msg, G):
            if m:
                for i, g in enumerate(row):
                    word[i] += m * g
        yield FieldVector(q, tuple(word))


def minimum_distance(P: Poset, C: LinearCode, cap: int = DEFAULT_CAP) -> int:
    if C.k < 1:
        raise InputError("minimum distance needs k >= 1")
    return min(p_weight(P, c) for c in enumerate_codewords(C, cap) if not c.is_zero())


def code_from_rows(q: int, rows: Sequence[Sequence[int]]) -> LinearCode:
    return LinearCode(q, tuple(tuple(r) for r in rows))
