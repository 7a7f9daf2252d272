"""togglekit: exact toggle dynamics on finite posets.

Rowmotion and promotion in three regimes sharing one engine:
combinatorial (order ideals), piecewise-linear (order polytope, max/min),
and birational (positive rationals, sums and parallel sums), plus the
rectangle identities, homomesy statistics, and the bridge from
semistandard tableaux through Gelfand-Tsetlin patterns.
"""

from .birational import (
    birational_three_step,
    quotient_sequence,
    recombine,
    recombine_inverse,
    reciprocity_check,
    rowmotion_iterates,
)
from .dynamics import (
    BIRATIONAL,
    PL,
    PArray,
    ToggleAlgebra,
    birational_algebra,
    file_toggle,
    ideal_from_vertex,
    pl_algebra,
    promotion,
    promotion_inverse,
    rowmotion,
    rowmotion_inverse,
    toggle,
    vertex_from_ideal,
)
from .homomesy import (
    Functional,
    exact_rank,
    homomesy_check,
    homomesy_space_rank,
    orbit_statistic,
    orbit_statistics,
    standard_functionals,
)
from .orbits import OrbitError, OrbitRecord, orbit, orbit_partition
from .polytopes import (
    in_chain_polytope,
    in_order_polytope,
    pl_three_step,
    pl_toggle,
    three_step,
    transfer,
    transfer_inverse,
)
from .posets import (
    OrderIdeal,
    Poset,
    PosetError,
    RcEmbedding,
    brouwer_schrijver,
    complement_filter,
    down_closure,
    enumerate_ideals,
    file_toggle_ideal,
    filter_minimals,
    promotion_ideal,
    rectangle_poset,
    rowmotion_by_complementation,
    rowmotion_ideal,
    toggle_ideal,
    triangle_poset,
)
from .rational import BACKEND, Rat, as_integer, format_rat, parse_rat, rat
from .tableaux import (
    GtPattern,
    Tableau,
    TableauError,
    array_to_pattern,
    array_to_tableau,
    bender_knuth,
    pattern_to_array,
    pattern_to_tableau,
    tableau_promotion,
    tableau_to_array,
    tableau_to_pattern,
)
from .verify import SUITES

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BIRATIONAL",
    "Functional",
    "GtPattern",
    "OrbitError",
    "OrbitRecord",
    "OrderIdeal",
    "PArray",
    "PL",
    "Poset",
    "PosetError",
    "Rat",
    "RcEmbedding",
    "SUITES",
    "Tableau",
    "TableauError",
    "ToggleAlgebra",
    "array_to_pattern",
    "array_to_tableau",
    "as_integer",
    "bender_knuth",
    "birational_algebra",
    "birational_three_step",
    "brouwer_schrijver",
    "complement_filter",
    "down_closure",
    "enumerate_ideals",
    "exact_rank",
    "file_toggle",
    "file_toggle_ideal",
    "filter_minimals",
    "format_rat",
    "homomesy_check",
    "homomesy_space_rank",
    "ideal_from_vertex",
    "in_chain_polytope",
    "in_order_polytope",
    "orbit",
    "orbit_partition",
    "orbit_statistic",
    "orbit_statistics",
    "parse_rat",
    "pattern_to_array",
    "pattern_to_tableau",
    "pl_algebra",
    "pl_three_step",
    "pl_toggle",
    "promotion",
    "promotion_ideal",
    "promotion_inverse",
    "quotient_sequence",
    "rat",
    "recombine",
    "recombine_inverse",
    "reciprocity_check",
    "rectangle_poset",
    "rowmotion",
    "rowmotion_by_complementation",
    "rowmotion_ideal",
    "rowmotion_inverse",
    "rowmotion_iterates",
    "standard_functionals",
    "tableau_promotion",
    "tableau_to_array",
    "tableau_to_pattern",
    "three_step",
    "toggle",
    "toggle_ideal",
    "transfer",
    "transfer_inverse",
    "triangle_poset",
    "vertex_from_ideal",
]
