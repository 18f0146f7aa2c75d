"""distlab: exact k-distance graph transforms, surveys and witness search."""
from .bounds import (
    HOLDS,
    HOLDS_VACUOUSLY,
    NOT_APPLICABLE,
    VIOLATION,
    BoundReport,
    check_bounds,
    family_graph,
    lower_bound_witness_check,
)
from .canon import are_isomorphic, canonical_form
from .enumeration import SurveyTable, enumerate_connected, survey
from .graphs import (
    MAX_VERTICES,
    UNREACHABLE,
    Graph,
    WindowNotInduced,
    all_pairs_distances,
    common_neighborhood,
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    diameter,
    diameter_pair,
    empty_graph,
    from_edge_list,
    halved_walk,
    is_connected,
    is_path_complement,
    k_distance,
    path_graph,
)
from .sat import (
    BudgetExhausted,
    CnfFormula,
    SearchParams,
    Unsat,
    VarMap,
    Witness,
    build_formula,
    decode_model,
    search,
)

__version__ = "0.1.0"

__all__ = [
    "HOLDS",
    "HOLDS_VACUOUSLY",
    "NOT_APPLICABLE",
    "VIOLATION",
    "BoundReport",
    "check_bounds",
    "family_graph",
    "lower_bound_witness_check",
    "are_isomorphic",
    "canonical_form",
    "SurveyTable",
    "enumerate_connected",
    "survey",
    "MAX_VERTICES",
    "UNREACHABLE",
    "Graph",
    "WindowNotInduced",
    "all_pairs_distances",
    "common_neighborhood",
    "complement",
    "complete_graph",
    "connected_components",
    "cycle_graph",
    "diameter",
    "diameter_pair",
    "empty_graph",
    "from_edge_list",
    "halved_walk",
    "is_connected",
    "is_path_complement",
    "k_distance",
    "path_graph",
    "BudgetExhausted",
    "CnfFormula",
    "SearchParams",
    "Unsat",
    "VarMap",
    "Witness",
    "build_formula",
    "decode_model",
    "search",
    "__version__",
]
