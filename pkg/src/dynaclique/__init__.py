"""Dynamic maximal clique enumeration under edge insertions.

The engine keeps the exact set of maximal cliques (optionally maximal
k-cliques) of a growing graph. Each insertion is repaired locally from the
cliques containing the edge's endpoints instead of re-enumerating, with a
from-scratch enumerator available as ground truth.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as KERNEL_BACKEND
from .batch import IndependenceMode, Schedule, apply_batch, edges_independent, schedule_batch
from .dynamic import (
    choose_side,
    generate_candidates_existing,
    generate_candidates_proposed,
    insert_edge_update,
    is_maximal_in,
    remove_stale,
)
from .errors import (
    DuplicateCliqueError,
    FormatError,
    SelfLoopError,
    UnknownCliqueError,
    UnknownVertexError,
)
from .filtration import (
    EdgeStream,
    FiltrationRun,
    build_edge_stream,
    load_edge_stream,
    load_point_cloud,
    run_filtration,
)
from .graph import Graph, canonical_edge, is_clique, load_edge_list
from .index import (
    KCliqueIndex,
    MaximalCliqueIndex,
    canonical_key,
    format_enumeration,
    parse_enumeration,
)
from .kclique import k_expand_oversized, k_generate_candidates, k_insert_edge_update
from .oracle import enumerate_maximal_cliques, enumerate_maximal_k_cliques
from .reports import InsertionReport, Method, write_reports_csv

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    "apply_batch",
    "build_edge_stream",
    "canonical_edge",
    "canonical_key",
    "choose_side",
    "DuplicateCliqueError",
    "EdgeStream",
    "edges_independent",
    "enumerate_maximal_cliques",
    "enumerate_maximal_k_cliques",
    "FiltrationRun",
    "FormatError",
    "format_enumeration",
    "generate_candidates_existing",
    "generate_candidates_proposed",
    "Graph",
    "IndependenceMode",
    "insert_edge_update",
    "InsertionReport",
    "is_clique",
    "is_maximal_in",
    "KCliqueIndex",
    "k_expand_oversized",
    "k_generate_candidates",
    "k_insert_edge_update",
    "load_edge_list",
    "load_edge_stream",
    "load_point_cloud",
    "MaximalCliqueIndex",
    "Method",
    "parse_enumeration",
    "remove_stale",
    "run_filtration",
    "Schedule",
    "schedule_batch",
    "SelfLoopError",
    "UnknownCliqueError",
    "UnknownVertexError",
    "write_reports_csv",
]
