"""Size multipartite Ramsey numbers for cliques versus stars.

m_j(H, G) is the least t such that every red/blue coloring of the complete
multipartite host with j parts of size t contains a red H or a blue G.
This package evaluates the known closed-form bounds and exact values for
m_j(K_m, K_{1,n}), builds the grouped witness colorings that certify the
lower bounds, and cross-validates everything at desk scale with exact
search oracles.
"""

from .constructions import (
    GroupAssignment,
    VerificationReport,
    partition_witness,
    turan_witness,
    verify_witness,
)
from .errors import (
    ColoringFormatError,
    DomainError,
    InternalInconsistency,
    MultiramseyError,
    OrderTooLarge,
    PatternTooLarge,
)
from .formulas import (
    BoundResult,
    FRecord,
    chromatic_lower_bound,
    exact_star,
    f_formula,
    maxdeg_lower_bound,
    star_bounds,
)
from .graphcore import (
    BLUE,
    RED,
    HostColoring,
    PartiteSpec,
    PatternGraph,
    chromatic_number,
    contains_subgraph,
    find_subgraph,
    format_coloring,
    has_clique,
    max_color_degree,
    min_color_degree,
    parse_coloring,
)
from .oracle import (
    OracleOutcome,
    SearchBudget,
    f_exact_search,
    generic_ramsey_oracle,
    star_ramsey_exact,
)

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "BoundResult",
    "ColoringFormatError",
    "DomainError",
    "FRecord",
    "GroupAssignment",
    "HostColoring",
    "InternalInconsistency",
    "MultiramseyError",
    "OracleOutcome",
    "OrderTooLarge",
    "PartiteSpec",
    "PatternGraph",
    "PatternTooLarge",
    "RED",
    "SearchBudget",
    "VerificationReport",
    "chromatic_lower_bound",
    "chromatic_number",
    "contains_subgraph",
    "exact_star",
    "f_exact_search",
    "f_formula",
    "find_subgraph",
    "format_coloring",
    "generic_ramsey_oracle",
    "has_clique",
    "max_color_degree",
    "maxdeg_lower_bound",
    "min_color_degree",
    "parse_coloring",
    "partition_witness",
    "star_bounds",
    "star_ramsey_exact",
    "turan_witness",
    "verify_witness",
]
