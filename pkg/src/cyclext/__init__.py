"""Cycle structure analysis for locally connected graphs with large minimum clustering coefficient.

A polynomial-time recognizer classifies a hypothesis-class graph (connected,
order >= 3, locally connected, min degree >= 2, max degree <= 6, minimum
clustering coefficient >= 1/2) as fully cycle extendable or names a
forbidden-structure obstruction; exponential-time cycle oracles provide the
ground truth, and a verification harness checks the two against each other
exhaustively at small orders.
"""

from .catalog import (
    CatalogError,
    Embedding,
    Obstruction,
    PatternGraph,
    are_isomorphic,
    build_catalog,
    contains_forbidden,
    find_strongly_induced,
    load_patterns,
)
from .cycles import (
    DEFAULT_CYCLE_BUDGET,
    BudgetExceededError,
    Cycle,
    CycleSpectrum,
    ExtendabilityReport,
    Lemma1Violation,
    NotApplicableError,
    check_lemma1,
    cut_set_nonhamiltonicity_witness,
    cycle_spectrum,
    enumerate_cycles,
    has_cycle_of_length,
    is_cycle_extendable_at,
    is_fully_cycle_extendable,
    is_hamiltonian,
    is_pancyclic,
    is_weakly_pancyclic,
)
from .graph import (
    MAX_VERTICES,
    BitsetCapError,
    Graph,
    Graph6Error,
    NamedGraph,
    complement,
    complete_graph,
    complete_minus_edge,
    complete_tripartite_113,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    is_connected,
    join,
    open_neighborhood,
    closed_neighborhood,
    parse_graph6,
    path_graph,
    star_graph,
    standard_graphs,
    strong_product_path_k2,
    write_graph6,
)
from .harness import (
    VerificationReport,
    canonical_form,
    canonical_labeling,
    enumerate_connected_graphs,
    random_probe,
    verify_corollary,
    verify_theorem,
)
from .localprops import (
    LocalProfile,
    UndefinedCoefficientError,
    are_true_twins,
    clustering_coefficient,
    degree_stats,
    is_claw_free,
    is_locally_connected,
    local_profile,
    min_clustering_coefficient,
    true_twin_classes,
)
from .recognizer import (
    Classification,
    HypothesisCheck,
    InternalContradictionError,
    OutOfScopeError,
    check_hypotheses,
    classify,
    predict_weakly_pancyclic,
)

__version__ = "0.1.0"
