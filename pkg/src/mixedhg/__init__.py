"""Mixed-hypergraph coloring: spectra, minimum one-realizations, verification."""

from .core import (
    ISO_VERTEX_CAP,
    IsoMapping,
    MixedHypergraph,
    are_isomorphic,
    is_isomorphism,
)
from .coloring import (
    Partition,
    Spectrum,
    all_feasible_partitions,
    chromatic_spectrum,
    enumerate_strict,
    feasible_set,
    gaps,
    has_gap_at,
    is_gap_free,
    is_proper,
)
from .constructions import (
    TargetSet,
    canonical_coloring,
    construct_one,
    construct_two,
    construction_labels,
    is_realizable_set,
    minimum_size,
    smallest_one_realization,
)
from .search import (
    Outcome,
    SearchBudget,
    SearchReport,
    bounded_minimality_search,
    check_minimum_size,
    deletion_criticality,
    is_one_realization,
    is_realization,
)

__version__ = "0.1.0"

__all__ = [
    "ISO_VERTEX_CAP",
    "IsoMapping",
    "MixedHypergraph",
    "Outcome",
    "Partition",
    "SearchBudget",
    "SearchReport",
    "Spectrum",
    "TargetSet",
    "all_feasible_partitions",
    "are_isomorphic",
    "bounded_minimality_search",
    "canonical_coloring",
    "check_minimum_size",
    "chromatic_spectrum",
    "construct_one",
    "construct_two",
    "construction_labels",
    "deletion_criticality",
    "enumerate_strict",
    "feasible_set",
    "gaps",
    "has_gap_at",
    "is_gap_free",
    "is_isomorphism",
    "is_one_realization",
    "is_proper",
    "is_realizable_set",
    "is_realization",
    "minimum_size",
    "smallest_one_realization",
]
