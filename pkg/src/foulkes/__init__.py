"""Minimal constituents of block-partition permutation characters.

The package enumerates closed set families of a rectangular shape, builds
and verifies the associated Specht-module homomorphisms, and independently
validates every predicted minimal constituent with a brute-force character
oracle.
"""

from .errors import ConsistencyError, GuardError
from .partitions import (
    Composition,
    Partition,
    as_composition,
    as_partition,
    conjugate,
    dominates,
    partitions_of,
    star,
    star_preimage,
    subtract_rect,
    union_parts,
    weight,
)
from .subsets import MSubset, as_msubset, level, lower_covers, majorizes
from .families import (
    SetFamily,
    TypedFamilyReport,
    close,
    conj_type,
    downset,
    downset_union,
    enumerate_closed,
    enumerate_of_type,
    family_from_json,
    family_to_json,
    family_type,
    is_closed,
    minimal_types,
)
from .specht import (
    FormalSum,
    alphabet,
    column_group,
    garnir_check,
    hom_image,
    indexed_partition,
    strip_indices,
    strip_to_family,
    supports_disjoint,
)
from .characters import (
    Decomposition,
    chi_value,
    class_size,
    decompose,
    dimension,
    foulkes_value,
    inner_product,
    minimal_constituents,
)
from .generalized import (
    build_report,
    candidate_unions,
    minimal_candidates,
    rect_decompose,
    verify_against_oracle,
)

__version__ = "0.1.0"
