"""Exact computations on (m, n)-colored mixed graphs: see relations, relative and
absolute clique numbers, colored chromatic numbers and extremal coloring searches."""

from ._bitset import BudgetExceeded
from .bounds import (
    degeneracy,
    detect_F1,
    detect_F2,
    forest_bound,
    max_degree_rel_bound,
    outerplanar_bound,
    path_bound,
    planar_bounds,
    see_degeneracy_bound,
    verify_lemma32,
)
from .cliques import is_absolute_clique_set, is_mn_clique, is_relative_clique, omega_a, omega_r
from .graph import (
    AdjacencyType,
    MixedGraph,
    SimpleGraph,
    enumerate_subcubic,
    named_graph,
    parse_graph6,
    parse_mng,
    serialize_mng,
    to_graph6,
    underlying,
    validate,
)
from .homomorphism import IdentificationConflict, chi_mn, family_chi_check, hom_exists, is_homomorphism, quotient_pair
from .relations import DIRECT, adjacency_type_toward, agree_on, is_special_two_path, see_graph, see_witness, sees
from .search import edge_color, maximize_omega_r, unique_two_path_check, verify_theorem41, wagner_03

__version__ = "0.1.0"

__all__ = [
    "adjacency_type_toward",
    "AdjacencyType",
    "agree_on",
    "BudgetExceeded",
    "chi_mn",
    "degeneracy",
    "detect_F1",
    "detect_F2",
    "DIRECT",
    "edge_color",
    "enumerate_subcubic",
    "family_chi_check",
    "forest_bound",
    "hom_exists",
    "IdentificationConflict",
    "is_absolute_clique_set",
    "is_homomorphism",
    "is_mn_clique",
    "is_relative_clique",
    "is_special_two_path",
    "max_degree_rel_bound",
    "maximize_omega_r",
    "MixedGraph",
    "named_graph",
    "omega_a",
    "omega_r",
    "outerplanar_bound",
    "parse_graph6",
    "parse_mng",
    "path_bound",
    "planar_bounds",
    "quotient_pair",
    "see_degeneracy_bound",
    "see_graph",
    "see_witness",
    "sees",
    "serialize_mng",
    "SimpleGraph",
    "to_graph6",
    "underlying",
    "unique_two_path_check",
    "validate",
    "verify_lemma32",
    "verify_theorem41",
    "wagner_03",
]
