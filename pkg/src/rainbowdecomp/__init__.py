"""Rainbow decompositions of edge-colored multigraphs whose color classes are
spanning stars, trees or paths."""

from .constructors import (
    TwoCenterConfig,
    construct_different_centers,
    construct_identical_trees,
    construct_same_center,
    construct_two_centers,
    two_center_config,
)
from .errors import (
    CentersNotAllEqual,
    CentersNotDistinct,
    ClassesNotIdentical,
    CountUnavailable,
    GraphFormatError,
    HypothesisViolation,
    InstanceTooLarge,
    InvalidLatinSquare,
    InvalidTwoCenterConfig,
    NotAStarConfiguration,
    NotMatrixEncodable,
    OutOfSupportedRange,
    RainbowError,
)
from .graph import (
    ColoredEdge,
    ColoredMultigraph,
    RainbowCollection,
    RainbowSubgraph,
    StarConfiguration,
    ValidationReport,
    as_star_configuration,
    canonicalize,
    decomposition_problems,
    is_valid_decomposition,
    validate_graph,
    vertex_degree_profile,
)
from .kernels import BACKEND
from .latin import (
    LatinSquare,
    count_latin_squares,
    count_latin_via_permanent,
    count_omega,
    permanent,
    rainbow_matrix_of,
)
from .search import (
    SearchReport,
    SearchRequest,
    count_rainbow_star_decompositions_fast,
    search_decompositions,
    stars_to_stars_feasible,
)

__version__ = "0.1.0"
