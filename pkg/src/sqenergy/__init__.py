"""Square energies of unicyclic graphs, two independent ways.

The eigenvalue pipeline (spectrum) and the matching-polynomial pipeline
(coulson) both produce delta = s_plus - s_minus; the verify module checks
them against each other and against the k mod 4 sign trichotomy.
"""

from .coulson import (
    QuadratureParams,
    ThetaClosedForm,
    delta_even,
    delta_integral,
    m_ratio,
    theta_closed,
)
from .graphs import (
    Graph,
    UnicyclicDecomposition,
    classify_unicyclic,
    cycle_graph,
    enumerate_unicyclic_labeled,
    induced_delete,
    is_connected,
    parse_edge_list,
    parse_graph6,
    random_unicyclic,
)
from .matchpoly import (
    IntPoly,
    MatchingCounts,
    brute_force_matching_counts,
    char_poly_leverrier,
    char_poly_unicyclic,
    matching_counts,
    matching_poly,
)
from .spectrum import (
    Spectrum,
    SquareEnergies,
    eigenvalues_symmetric,
    square_energies,
    theta_eigen,
)
from .verify import (
    AnalysisReport,
    CampaignSummary,
    analyze,
    exhaustive_campaign,
    random_campaign,
    sweep_cycles,
)

__all__ = [
    "Graph", "UnicyclicDecomposition", "classify_unicyclic", "cycle_graph",
    "enumerate_unicyclic_labeled", "induced_delete", "is_connected",
    "parse_edge_list", "parse_graph6", "random_unicyclic",
    "IntPoly", "MatchingCounts", "brute_force_matching_counts",
    "char_poly_leverrier", "char_poly_unicyclic", "matching_counts",
    "matching_poly",
    "Spectrum", "SquareEnergies", "eigenvalues_symmetric", "square_energies",
    "theta_eigen",
    "QuadratureParams", "ThetaClosedForm", "delta_even", "delta_integral",
    "m_ratio", "theta_closed",
    "AnalysisReport", "CampaignSummary", "analyze", "exhaustive_campaign",
    "random_campaign", "sweep_cycles",
]

__version__ = "0.1.0"
