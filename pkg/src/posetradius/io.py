"""Text formats for posets, codes and integer lists.

Poset files start with ``n`` followed by ``a b`` lines (``a <= b``), or with
``matrix n`` followed by ``n`` rows of 0/1. Code files start with ``q n k``
followed by ``k`` generator rows. List files are whitespace-separated
positive integers. ``#`` starts a comment everywhere.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .codes import LinearCode
from .errors import InputError
from .poset import Poset, poset_from_adjacency_matrix, poset_from_cover_relations

PathLike = Union[str, Path]


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _ints(line: str) -> list[int]:
    try:
        return [int(t) for t in line.split()]
    except ValueError:
        raise InputError(f"expected integers, got {line!r}") from None


def parse_poset(text: str) -> Poset:
    lines = _lines(text)
    if not lines:
        raise InputError("empty poset file")
    head = lines[0].split()
    if head[0] == "matrix":
        if len(head) != 2:
            raise InputError("header must be 'matrix n'")
        n = _ints(head[1])[0]
        rows = [_ints(line) for line in lines[1:]]
        if len(rows) != n:
            raise InputError(f"expected {n} matrix rows, got {len(rows)}")
        return poset_from_adjacency_matrix(rows)
    if len(head) != 1:
        raise InputError("first line must be 'n' or 'matrix n'")
    n = _ints(head[0])[0]
    pairs = []
    for line in lines[1:]:
        vals = _ints(line)
        if len(vals) != 2:
            raise InputError(f"relation line must hold two elements: {line!r}")
        pairs.append((vals[0], vals[1]))
    return poset_from_cover_relations(n, pairs)


def format_poset_matrix(P: Poset) -> str:
    rows = [" ".join(map(str, r)) for r in P.adjacency_matrix()]
    return "\n".join([f"matrix {P.n}"] + rows) + "\n"


def format_poset_relations(P: Poset) -> str:
    lines = [str(P.n)]
    for b in range(1, P.n + 1):
        for a in range(1, P.n + 1):
            if a != b and P.leq(a, b):
                lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> LinearCode:
    lines = _lines(text)
    if not lines:
        raise InputError("empty code file")
    head = _ints(lines[0])
    if len(head) != 3:
        raise InputError("first line must be 'q n k'")
    q, n, k = head
    rows = [_ints(line) for line in lines[1:]]
    if len(rows) != k or any(len(r) != n for r in rows):
        raise InputError(f"expected {k} rows of {n} entries")
    return LinearCode(q, tuple(tuple(r) for r in rows))


def parse_list(text: str) -> list[int]:
    values = [v for line in _lines(text) for v in _ints(line)]
    if not values:
        raise InputError("empty list")
    if any(v < 1 for v in values):
        raise InputError("list values must be positive integers")
    return values


def read_poset(path: PathLike) -> Poset:
    return parse_poset(Path(path).read_text())


def read_code(path: PathLike) -> LinearCode:
    return parse_code(Path(path).read_text())


def read_list(path: PathLike) -> list[int]:
    return parse_list(Path(path).read_text())
