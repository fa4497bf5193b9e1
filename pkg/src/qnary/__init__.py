"""Lyndon word combinatorics and pseudo-orbit spectral statistics of
q-nary quantum graphs."""

from .words import (
    DEFAULT_ENUMERATION_BUDGET,
    BudgetExceededError,
    LyndonCountTable,
    LyndonFactorization,
    SeriesTruncation,
    Word,
    count_lyndon,
    count_strictly_decreasing,
    count_strictly_decreasing_bruteforce,
    duval_factorize,
    is_lyndon,
    is_strictly_decreasing,
    lex_compare,
    lyndon_count_table,
    lyndon_subset_series,
    lyndon_words,
    verify_lyndon_count_identity,
)
from .debruijn import (
    EdgeMultiplicityVector,
    PeriodicOrbit,
    PseudoOrbit,
    QNaryGraph,
    build_graph,
    edge_multiplicities,
    orbit_from_word,
    primitive_periodic_orbits,
    primitive_pseudo_orbits,
)
from .quantum import (
    CharPolyCoefficients,
    EdgeLengths,
    ScatteringMatrix,
    SpectralInstance,
    assemble_sigma,
    build_instance,
    char_poly_direct,
    coeff_from_pseudo_orbits,
    dft_matrix,
    evolution_operator,
    expansion_terms,
    orbit_amplitude,
    pseudo_orbit_amplitude,
    pseudo_orbit_length,
    sample_edge_lengths,
)
from .spectral_stats import (
    VarianceReport,
    diagonal_variance,
    diagonal_variance_from_orbits,
    exact_grouped_variance,
    monte_carlo_coefficient_means,
    monte_carlo_variance,
    rmt_reference,
    variance_report,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CharPolyCoefficients",
    "DEFAULT_ENUMERATION_BUDGET",
    "EdgeLengths",
    "EdgeMultiplicityVector",
    "LyndonCountTable",
    "LyndonFactorization",
    "PeriodicOrbit",
    "PseudoOrbit",
    "QNaryGraph",
    "ScatteringMatrix",
    "SeriesTruncation",
    "SpectralInstance",
    "VarianceReport",
    "Word",
    "assemble_sigma",
    "build_graph",
    "build_instance",
    "char_poly_direct",
    "coeff_from_pseudo_orbits",
    "count_lyndon",
    "count_strictly_decreasing",
    "count_strictly_decreasing_bruteforce",
    "dft_matrix",
    "diagonal_variance",
    "diagonal_variance_from_orbits",
    "duval_factorize",
    "edge_multiplicities",
    "evolution_operator",
    "exact_grouped_variance",
    "expansion_terms",
    "is_lyndon",
    "is_strictly_decreasing",
    "lex_compare",
    "lyndon_count_table",
    "lyndon_subset_series",
    "lyndon_words",
    "monte_carlo_coefficient_means",
    "monte_carlo_variance",
    "orbit_amplitude",
    "orbit_from_word",
    "primitive_periodic_orbits",
    "primitive_pseudo_orbits",
    "pseudo_orbit_amplitude",
    "pseudo_orbit_length",
    "rmt_reference",
    "sample_edge_lengths",
    "variance_report",
    "verify_lyndon_count_identity",
]
