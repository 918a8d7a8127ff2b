"""Clique values, the clique handshaking identity and Mantel-type bounds."""

from .bounds import (
    BoundReport,
    ChainStep,
    IneligibleGraph,
    ProofChainReport,
    check_clique_mantel,
    tightness_gap,
    verify_proof_chain,
)
from .cliques import (
    Clique,
    CliqueCensus,
    HandshakingReport,
    KellyReport,
    clique_census,
    clique_value,
    enumerate_cliques,
    subgraph_count,
    verify_handshaking,
    verify_kelly,
)
from .graph import (
    Edge,
    Graph,
    GraphError,
    enumerate_all_labeled_graphs,
    from_edge_list,
    from_graph6,
    generate,
    neighborhood,
    read_edge_list,
    to_graph6,
    write_edge_list,
)
from .packing import (
    PackingSolution,
    SolverBudget,
    greedy_maximal_packing,
    is_vertex_disjoint,
    max_clique_packing,
)

__version__ = "0.1.0"
