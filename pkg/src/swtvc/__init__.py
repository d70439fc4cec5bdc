"""Sliding-window temporal vertex cover (delta-TVC) solver toolkit."""

from .bench import (
    ALGORITHMS,
    BenchRecord,
    compare_csv,
    geometric_mean,
    improvement,
    run_benchmark,
    write_csv,
)
from .degree import (
    chosen_endpoint,
    d1_approx_solve,
    d_approx_s_solve,
    d_approx_solve,
    single_edge_exact,
)
from .errors import (
    BadConfigError,
    BadDeltaError,
    BudgetExceededError,
    DuplicateAppearanceError,
    EmptyInputError,
    NegativeTimestampError,
    NonPositiveSampleError,
    NotAStarError,
    OutOfRangeLabelError,
    OutOfRangeVertexError,
    ParseError,
    SelfLoopError,
    TooLargeError,
    TvcError,
)
from .exact import brute_force_solve, exact_solve
from .formats import (
    convert_snap,
    parse_cover,
    parse_native,
    write_cover,
    write_native,
)
from .generator import (
    GeneratorConfig,
    generate_always_star,
    worst_case_acov_instance,
    worst_case_sc_instance,
)
from .graph import (
    Cover,
    Demand,
    TemporalGraph,
    UnderlyingEdge,
    VertexAppearance,
    build_graph,
    demands,
    edges_at,
    max_snapshot_degree,
    star_center_at,
    validate_always_star,
    validate_cover,
)
from .star import star_acov_solve, star_sc_solve

__version__ = "0.1.0"
