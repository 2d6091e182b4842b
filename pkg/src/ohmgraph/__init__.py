"""Exact algebra of circular planar electrical networks.

Response and resistance matrices, Kalmanson metrics and circular split
decompositions, the Grassmannian (Plücker) test for resistance metrics,
and reconstruction of minimal network topologies from a distance matrix.
All arithmetic uses :class:`fractions.Fraction`.
"""

from .errors import *  # noqa: F401,F403
from .exact import to_fraction
from .grassmann import (
    OmegaMatrix,
    PluckerVector,
    build_omega_resistance,
    build_omega_response,
    certify_nonnegative,
    connectivity_indicator,
    is_electrical_via_grassmannian,
    plucker,
    shift_operator,
    three_term_relation,
)
from .metrics import (
    Split,
    Verdict,
    WeightedSplitSystem,
    check_metric,
    circular_minor_test,
    enumerate_circular_pairs,
    find_circular_order,
    gromov_transform,
    is_electrical_via_dual,
    kalmanson_check,
    m_of_d,
    metric_from_splits,
    resistance_from_dual_response,
    split_metric,
    split_weights,
)
from .netcore import (
    MOVES,
    Edge,
    WeightedGraph,
    dual_network,
    graph,
    laplacian,
    resistance_matrix,
    resistance_oracle,
    response_matrix,
    simplify,
    spanning_tree_polynomial,
    transform,
)
from .reconstruct import (
    ChordArrangement,
    StrandPermutation,
    arrangement_to_network,
    build_chord_arrangement,
    column_permutation_g,
    crossing_count,
    fit_tree_weights,
    medial_strands,
    reconstruct_topology,
    recover_tree,
    strand_permutation,
    strands_of_matrix,
    triangles_to_stars,
    verify_round_trip,
)

__version__ = "0.1.0"
