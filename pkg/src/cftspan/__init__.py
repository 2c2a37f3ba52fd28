"""Color fault-tolerant graph spanners: builders, oracles and hard instances."""
from .graph import (
    INF,
    ColoredGraph,
    Edge,
    Setting,
    components,
    damages,
    girth,
    restrict,
    shortest_dist,
    subtract,
)
from .io import ParseError, parse, read_graph, serialize, write_graph
from .greedy import (
    BlockingSet,
    BudgetExceeded,
    BuildReport,
    build_ft_greedy,
    extract_blocking_set,
    find_separating_fault_set,
    verify_blocking_set,
)
from .modified import ReplaceabilityResult, blame_bound_check, build_modified_greedy, is_replaceable
from .oracle import (
    VerifyOutcome,
    build_certificate,
    sample_blocked_subgraph,
    verify_certificate,
    verify_ft_spanner,
)
from .lowerbound import DensityExhausted, GirthBase, gen_ecft_lower, gen_list_lower, gen_mcft_lower, girth_base
from .estimators import ConnectivityCertificate, FTGreedySpanner, ModifiedGreedySpanner

__version__ = "0.1.0"

__all__ = [
    "INF",
    "ColoredGraph",
    "Edge",
    "Setting",
    "components",
    "damages",
    "girth",
    "restrict",
    "shortest_dist",
    "subtract",
    "ParseError",
    "parse",
    "read_graph",
    "serialize",
    "write_graph",
    "BlockingSet",
    "BudgetExceeded",
    "BuildReport",
    "build_ft_greedy",
    "extract_blocking_set",
    "find_separating_fault_set",
    "verify_blocking_set",
    "ReplaceabilityResult",
    "blame_bound_check",
    "build_modified_greedy",
    "is_replaceable",
    "VerifyOutcome",
    "build_certificate",
    "sample_blocked_subgraph",
    "verify_certificate",
    "verify_ft_spanner",
    "DensityExhausted",
    "GirthBase",
    "gen_ecft_lower",
    "gen_list_lower",
    "gen_mcft_lower",
    "girth_base",
    "ConnectivityCertificate",
    "FTGreedySpanner",
    "ModifiedGreedySpanner",
]
