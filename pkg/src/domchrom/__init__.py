"""Exact dominator colorings of directed graphs.

A dominator coloring is a proper coloring of the underlying graph in
which every vertex that has out-neighbors dominates some color class
entirely contained in its out-neighborhood.  This package verifies
such colorings, computes the exact minimum number of classes for
digraphs on up to 64 vertices, sweeps every orientation of a small
base graph for the extremes, and builds the classic families (paths,
cycles, stars, tournaments, one-way bipartite, hub-augmented cycles)
together with certified optimal colorings where closed forms exist.
"""

from .coloring import (
    Coloring,
    DominationMode,
    Verdict,
    Violation,
    canonicalize,
    dominated_classes,
    is_proper,
    verify,
)
from .families import (
    FAMILY_KINDS,
    ConstructiveWitness,
    FamilySpec,
    base_graph,
    cycle_min_formula,
    cycle_optimal,
    directed_cycle,
    directed_path,
    family_digraph,
    family_witness,
    fig3_digraph,
    fig4_digraph,
    one_way_complete_bipartite,
    path_min_formula,
    path_optimal,
    star_optimal,
    star_oriented,
    tilde_cycle,
    tilde_cycle_optimal,
    tournament,
)
from .graphs import (
    BaseGraph,
    Digraph,
    OrientationCode,
    code_of,
    cycle_base,
    cycle_symmetry_classes,
    is_connected,
    make_digraph,
    orient,
    out_degree_sequence,
    out_neighbors,
    path_base,
    reverse,
    underlying,
)
from .invariants import (
    Embedding,
    GapReport,
    OrientationGapReport,
    dominator_discrepancy,
    dominator_gap,
    identity_embedding,
    is_subdigraph,
    orientation_gap,
    table_gap_cycle,
    table_gap_path,
)
from .solver import (
    GuardExceeded,
    SolveOutcome,
    SweepReport,
    chromatic_number,
    dominator_chromatic_number,
    dominator_chromatic_number_oracle,
    find_dominator_coloring,
    max_over_orientations,
    min_over_orientations,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BaseGraph",
    "Coloring",
    "ConstructiveWitness",
    "Digraph",
    "DominationMode",
    "Embedding",
    "FAMILY_KINDS",
    "FamilySpec",
    "GapReport",
    "GuardExceeded",
    "OrientationCode",
    "OrientationGapReport",
    "SolveOutcome",
    "SweepReport",
    "Verdict",
    "Violation",
    "base_graph",
    "canonicalize",
    "chromatic_number",
    "code_of",
    "cycle_base",
    "cycle_min_formula",
    "cycle_optimal",
    "cycle_symmetry_classes",
    "directed_cycle",
    "directed_path",
    "dominated_classes",
    "dominator_chromatic_number",
    "dominator_chromatic_number_oracle",
    "dominator_discrepancy",
    "dominator_gap",
    "family_digraph",
    "family_witness",
    "fig3_digraph",
    "fig4_digraph",
    "find_dominator_coloring",
    "identity_embedding",
    "is_connected",
    "is_proper",
    "is_subdigraph",
    "make_digraph",
    "max_over_orientations",
    "min_over_orientations",
    "one_way_complete_bipartite",
    "orient",
    "orientation_gap",
    "out_degree_sequence",
    "out_neighbors",
    "path_base",
    "path_min_formula",
    "path_optimal",
    "reverse",
    "star_optimal",
    "star_oriented",
    "sweep",
    "table_gap_cycle",
    "table_gap_path",
    "tilde_cycle",
    "tilde_cycle_optimal",
    "tournament",
    "underlying",
    "verify",
]
