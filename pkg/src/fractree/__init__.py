"""Self-similar graph families grown from cycles and wheels.

Two growth operations -- replacing every edge by a path, and attaching a
fresh base graph at every pre-existing vertex -- generate families of
planar self-similar graphs.  This package constructs them exactly,
computes their spanning-tree counts by three independent methods, and
cross-checks every closed-form invariant (size recurrences, entropy,
clustering coefficients) against direct computation.
"""

from .clustering import (
    ClusteringReport,
    average_clustering,
    clustering_closed,
    degree_census_predicted,
    local_clustering,
)
from .construct import (
    CopyCensus,
    base,
    build,
    copy_census,
    ept,
    glv,
    predicted_block_multiset,
    unfold_census_block_multiset,
)
from .errors import (
    BadParameterError,
    DisconnectedGraphError,
    DomainViolationError,
    FractreeError,
    InvalidVertexError,
    InvalidVertexSetError,
    OverflowCapError,
    SizeCapError,
)
from .exact import (
    FactoredCount,
    bareiss_determinant,
    factored_expand,
    factored_log,
)
from .graph import (
    Block,
    BlockKind,
    Graph,
    VertexInfo,
    VertexRole,
    blocks,
    degree_histogram,
    laplacian_minor,
    to_dot,
    to_edgelist_text,
    to_json_dict,
)
from .params import Family, FractalParams
from .sequences import (
    EntropyConvention,
    EntropyEstimate,
    QuadraticNumber,
    RecurrenceSpec,
    SizeSequences,
    binet_vertex,
    binet_vertex_fixed_constants,
    entropy_closed,
    entropy_limit,
    entropy_surface_rows,
    size_sequences,
)
from .spanning import (
    fibonacci_number,
    lucas_number,
    tau_blocks,
    tau_closed,
    tau_oracle,
    tau_wheel_base,
)
from .verify import DiscrepancyReport, verify_suite

__version__ = "0.1.0"

__all__ = [
    "average_clustering", "base", "bareiss_determinant", "binet_vertex",
    "binet_vertex_fixed_constants", "Block", "BlockKind", "blocks", "build",
    "BadParameterError", "ClusteringReport", "clustering_closed", "copy_census",
    "CopyCensus", "degree_census_predicted", "degree_histogram",
    "DisconnectedGraphError", "DiscrepancyReport", "DomainViolationError",
    "entropy_closed", "entropy_limit", "entropy_surface_rows",
    "EntropyConvention", "EntropyEstimate", "ept", "FactoredCount",
    "factored_expand", "factored_log", "Family", "fibonacci_number",
    "FractalParams", "FractreeError", "glv", "Graph", "InvalidVertexError",
    "InvalidVertexSetError", "laplacian_minor", "local_clustering",
    "lucas_number", "OverflowCapError", "predicted_block_multiset",
    "QuadraticNumber", "RecurrenceSpec", "SizeCapError", "size_sequences",
    "SizeSequences", "tau_blocks", "tau_closed", "tau_oracle",
    "tau_wheel_base", "to_dot", "to_edgelist_text", "to_json_dict",
    "unfold_census_block_multiset", "verify_suite", "VertexInfo", "VertexRole",
]
