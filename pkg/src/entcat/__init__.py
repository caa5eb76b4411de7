"""Exact-arithmetic analysis of bipartite pure-state entanglement transformations."""

from .core import (
    DEFAULT_COMPONENT_CAP,
    SchmidtVector,
    format_decimal,
    get_component_cap,
    parse_rational,
    parse_vector,
    set_component_cap,
    tensor,
    tensor_power,
)
from .errors import (
    DimensionMismatchError,
    EmptyInputError,
    EntcatError,
    IndexOutOfRangeError,
    InputError,
    InvalidParameterError,
    NoSearchNeededError,
    NonPositiveEntryError,
    NotNormalizedError,
    ResourceLimitError,
    VectorFormatError,
)
from .majorization import (
    FeasibilityReport,
    ObstructionSet,
    incomparable,
    majorizes,
    obstruction_set,
    tail_sum,
)
from .catalysis import (
    CatalystVerdict,
    FilterResult,
    FilterViolation,
    StabilityResult,
    is_catalyst,
    is_transformable,
    min_catalyst_copies,
    mlocc_threshold,
    multicopy_filter,
    single_copy_filter,
)
from .probabilistic import (
    BoundSandwich,
    ProbabilityReport,
    assisted_probability_bounds,
    combined_pmax,
    is_lambda_catalyst,
    max_conversion_probability,
    mlocc_attains,
    no_collective_advantage,
)
from .search import (
    SearchConfig,
    SearchCounters,
    SearchHit,
    SearchResult,
    TradeOffRow,
    TradeOffTable,
    grid_candidates,
    search_catalysts,
    trade_off,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_COMPONENT_CAP",
    "SchmidtVector",
    "format_decimal",
    "get_component_cap",
    "parse_rational",
    "parse_vector",
    "set_component_cap",
    "tensor",
    "tensor_power",
    "EntcatError",
    "InputError",
    "EmptyInputError",
    "VectorFormatError",
    "NonPositiveEntryError",
    "NotNormalizedError",
    "IndexOutOfRangeError",
    "DimensionMismatchError",
    "InvalidParameterError",
    "NoSearchNeededError",
    "ResourceLimitError",
    "FeasibilityReport",
    "ObstructionSet",
    "incomparable",
    "majorizes",
    "obstruction_set",
    "tail_sum",
    "CatalystVerdict",
    "FilterResult",
    "FilterViolation",
    "StabilityResult",
    "is_catalyst",
    "is_transformable",
    "min_catalyst_copies",
    "mlocc_threshold",
    "multicopy_filter",
    "single_copy_filter",
    "BoundSandwich",
    "ProbabilityReport",
    "assisted_probability_bounds",
    "combined_pmax",
    "is_lambda_catalyst",
    "max_conversion_probability",
    "mlocc_attains",
    "no_collective_advantage",
    "SearchConfig",
    "SearchCounters",
    "SearchHit",
    "SearchResult",
    "TradeOffRow",
    "TradeOffTable",
    "grid_candidates",
    "search_catalysts",
    "trade_off",
    "__version__",
]
