"""Gain distance matrices, Laplacians, and balance analysis for
complex unit gain graphs."""

from .distances import (
    DEFAULT_PATH_CAP,
    associated_complete_graph,
    auxiliary_gain,
    enumerate_shortest_paths,
    gain_distance_matrix,
    geodesic_gains,
    is_compatible,
    is_ordering_independent,
    shortest_distances,
    transmission_matrix,
)
from .documents import (
    GraphDocument,
    csv_to_matrix,
    emit_graph,
    format_complex,
    matrix_to_csv,
    parse_complex,
    parse_graph,
)
from .errors import (
    Disconnected,
    GainLapError,
    NotACycle,
    NotAWalk,
    NotHermitian,
    ParseError,
    PathExplosion,
    TooLarge,
    ValidationError,
    ZeroGain,
)
from .forests import (
    DEFAULT_SUBSET_BUDGET,
    OneForest,
    OneTree,
    det_direct,
    det_via_forests,
    enumerate_spanning_one_forests,
    forest_weight,
    is_spanning_one_forest,
    numerical_rank,
    spanning_subgraph,
)
from .graphs import (
    GainGraph,
    SwitchingFunction,
    VertexOrdering,
    WeightedGainGraph,
    cycle_gain,
    is_balanced,
    normalize_gain,
    path_gain,
    switch,
    unit_weights,
)
from .laplacians import (
    IncidenceMatrix,
    distance_factorization_residual,
    distance_incidence,
    distance_laplacian,
    factorization_residual,
    weighted_adjacency,
    weighted_degree_matrix,
    weighted_incidence,
    weighted_laplacian,
)
from .spectra import (
    CospectralityReport,
    SingularityReport,
    SwitchingReport,
    balance_by_cospectrality,
    balance_by_singularity,
    hermitian_eigensystem,
    hermitian_spectrum,
    is_cospectral,
    max_eigenpair_residual,
    singularity_threshold,
    switching_similarity_check,
)

__version__ = "0.1.0"

__all__ = [
    "CospectralityReport",
    "DEFAULT_PATH_CAP",
    "DEFAULT_SUBSET_BUDGET",
    "Disconnected",
    "GainGraph",
    "GainLapError",
    "GraphDocument",
    "IncidenceMatrix",
    "NotACycle",
    "NotAWalk",
    "NotHermitian",
    "OneForest",
    "OneTree",
    "ParseError",
    "PathExplosion",
    "SingularityReport",
    "SwitchingFunction",
    "SwitchingReport",
    "TooLarge",
    "ValidationError",
    "VertexOrdering",
    "WeightedGainGraph",
    "ZeroGain",
    "associated_complete_graph",
    "auxiliary_gain",
    "balance_by_cospectrality",
    "balance_by_singularity",
    "csv_to_matrix",
    "cycle_gain",
    "det_direct",
    "det_via_forests",
    "distance_factorization_residual",
    "distance_incidence",
    "distance_laplacian",
    "emit_graph",
    "enumerate_shortest_paths",
    "enumerate_spanning_one_forests",
    "factorization_residual",
    "forest_weight",
    "format_complex",
    "gain_distance_matrix",
    "geodesic_gains",
    "hermitian_eigensystem",
    "hermitian_spectrum",
    "is_balanced",
    "is_compatible",
    "is_cospectral",
    "is_ordering_independent",
    "is_spanning_one_forest",
    "matrix_to_csv",
    "max_eigenpair_residual",
    "normalize_gain",
    "numerical_rank",
    "parse_complex",
    "parse_graph",
    "path_gain",
    "shortest_distances",
    "singularity_threshold",
    "spanning_subgraph",
    "switch",
    "switching_similarity_check",
    "transmission_matrix",
    "unit_weights",
    "weighted_adjacency",
    "weighted_degree_matrix",
    "weighted_incidence",
    "weighted_laplacian",
]
