"""Exception types raised by the library."""

from __future__ import annotations


class PosetRadiusError(Exception):
    """Base class for every error raised by this package."""


class InputError(PosetRadiusError, ValueError):
    """Malformed input data or arguments."""


class CycleError(InputError):
    """The relation contains a directed cycle, so it is not antisymmetric."""


class RangeError(InputError, IndexError):
    """An element index lies outside ``1..n``."""


class NotAPartialOrder(InputError):
    """An adjacency matrix fails reflexivity, antisymmetry or transitivity."""


class EmptyIdeal(InputError):
    pass


class LengthMismatch(InputError):
    pass


class ModulusMismatch(InputError):
    pass


class ZeroVector(InputError):
    """The packing radius of the zero vector is undefined."""


class ZeroDimensionalCode(InputError):
    pass


class CapExceeded(PosetRadiusError):
    """An enumeration would exceed its configured size cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"enumeration of {count} items exceeds cap {cap}")
        self.count = count
        self.cap = cap


class TooLarge(PosetRadiusError):
    """A brute-force routine was asked to run beyond its hard size limit."""


class TooManyMaximal(TooLarge):
    pass


class EmptyList(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class OverlappingCommitments(InputError):
    """Two vectors commit the same maximal element."""


class TooFewColumns(InputError):
    pass


class EmptyMatrix(InputError):
    pass


class NotDominated(InputError):
    pass


class NotNullRow(InputError):
    pass


class DimensionMismatch(InputError):
    pass
