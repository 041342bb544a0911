"""Exact state counting and exclusion statistics for restricted
multimode oscillator algebras.

The package computes, in exact rational arithmetic, the dimensions of
projected Fock-space sectors built from deformed oscillator algebras
(Bose, Fermi and the interpolating q family), under occupancy
restriction rules such as minimum-gap exclusion, support sets, windows
and per-level caps. Closed-form counting functions are paired with a
definitional route (enumerate states, build the Gram matrix of inner
products, take its exact rank) so every formula can be cross-checked.
"""

from .core import (
    AlgebraSpec,
    BOSE,
    FERMI,
    ModeLattice,
    OccupancyConfig,
    bose,
    build_lattice,
    fermi,
    occupancy_of,
    quon,
)
from .counting import (
    CountResult,
    avg_g_identity_holds,
    binom,
    binomial_identity_holds,
    count_cs,
    count_cs_bose,
    count_cs_closed,
    count_cs_equal_pq,
    count_enumerated,
    count_gentile,
    count_haldane_wu,
    count_para_restricted,
    count_real,
    count_x_bose,
    count_x_fermi,
    lambda_eff,
    verify_identity,
)
from .cs_model import (
    Filling,
    blocked_oscillators,
    energy,
    ground_energy,
    ground_filling,
    phi_structure,
    pseudomomenta,
    truncated_bose_structure,
)
from .algebra_engine import (
    LinearCombination,
    apply_annihilator,
    apply_annihilator_to_combination,
    inner_product,
)
from .gram import (
    GramMatrix,
    exact_determinant,
    extended_g,
    gram_matrix,
    one_particle_dimension,
    permutation_orbit,
    rational_rank,
    sector_dimension,
)
from .haldane_params import (
    GReport,
    compare_cs_finite,
    compare_gentile_average,
    compare_para,
    compare_single_gentile,
    g_average_cs,
    g_cs_finite,
    g_gentile,
    g_gentile_average,
    g_haldane_cs,
    g_para_restricted,
    g_single_gentile,
    g_single_gentile_average,
)
from .restrictions import (
    CSRule,
    CapacityExceededError,
    GentileRule,
    RestrictionRule,
    TotalCapRule,
    WindowRule,
    XBoseRule,
    XFermiRule,
    count_allowed_words,
    enumerate_allowed,
    is_allowed,
    theta_cs,
    theta_window,
    theta_x,
    theta_x_bose,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "BOSE",
    "CSRule",
    "CapacityExceededError",
    "CountResult",
    "FERMI",
    "Filling",
    "GReport",
    "GentileRule",
    "GramMatrix",
    "LinearCombination",
    "ModeLattice",
    "OccupancyConfig",
    "RestrictionRule",
    "TotalCapRule",
    "WindowRule",
    "XBoseRule",
    "XFermiRule",
    "apply_annihilator",
    "apply_annihilator_to_combination",
    "avg_g_identity_holds",
    "binom",
    "binomial_identity_holds",
    "blocked_oscillators",
    "bose",
    "build_lattice",
    "compare_cs_finite",
    "compare_gentile_average",
    "compare_para",
    "compare_single_gentile",
    "count_allowed_words",
    "count_cs",
    "count_cs_bose",
    "count_cs_closed",
    "count_cs_equal_pq",
    "count_enumerated",
    "count_gentile",
    "count_haldane_wu",
    "count_para_restricted",
    "count_real",
    "count_x_bose",
    "count_x_fermi",
    "energy",
    "enumerate_allowed",
    "exact_determinant",
    "extended_g",
    "fermi",
    "g_average_cs",
    "g_cs_finite",
    "g_gentile",
    "g_gentile_average",
    "g_haldane_cs",
    "g_para_restricted",
    "g_single_gentile",
    "g_single_gentile_average",
    "gram_matrix",
    "ground_energy",
    "ground_filling",
    "inner_product",
    "is_allowed",
    "lambda_eff",
    "occupancy_of",
    "one_particle_dimension",
    "permutation_orbit",
    "phi_structure",
    "pseudomomenta",
    "quon",
    "rational_rank",
    "sector_dimension",
    "theta_cs",
    "theta_window",
    "theta_x",
    "theta_x_bose",
    "truncated_bose_structure",
    "verify_identity",
]
