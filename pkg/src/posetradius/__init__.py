"""Packing radius of vectors and linear codes under poset metrics."""

from __future__ import annotations

from .codes import FieldVector, LinearCode, enumerate_codewords, minimum_distance, p_distance, p_weight
from .differencing import (
    Entry,
    EVector,
    NumberMatrix,
    PartitionOutcome,
    compact,
    min_discordancy,
    packing_radius_matrix,
    radius_matrix,
)
from .errors import PosetRadiusError, InputError
from .partition import ClassicPartitionResult, brute_partition, ckk, discrepancy, kk_ldm
from .poset import (
    Poset,
    antichain,
    chain,
    classify,
    ideal,
    induced_ideal_subposet,
    maximal_elements,
    poset_from_adjacency_matrix,
    poset_from_cover_relations,
    standard_form,
)
from .radius import (
    CodeRadiusResult,
    PruneOptions,
    radius_of_code,
    radius_of_poset,
    radius_of_vector,
)

__version__ = "0.1.0"

__all__ = [
    "ClassicPartitionResult",
    "CodeRadiusResult",
    "EVector",
    "Entry",
    "FieldVector",
    "InputError",
    "LinearCode",
    "NumberMatrix",
    "PartitionOutcome",
    "Poset",
    "PosetRadiusError",
    "PruneOptions",
    "antichain",
    "brute_partition",
    "chain",
    "ckk",
    "classify",
    "compact",
    "discrepancy",
    "enumerate_codewords",
    "ideal",
    "induced_ideal_subposet",
    "kk_ldm",
    "maximal_elements",
    "min_discordancy",
    "minimum_distance",
    "p_distance",
    "p_weight",
    "packing_radius_matrix",
    "poset_from_adjacency_matrix",
    "poset_from_cover_relations",
    "radius_matrix",
    "radius_of_code",
    "radius_of_poset",
    "radius_of_vector",
    "standard_form",
]
