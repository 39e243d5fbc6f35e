"""Invariants of skew-line configurations computed from their linking matrices."""

from .signmat import (
    IntPolynomial,
    SignMatrix,
    SignMatrixError,
    SwitchingTransform,
    all_vorticities,
    apply_switching,
    canonical_form,
    char_poly,
    matrix_from_vorticities,
    new_sign_matrix,
    switching_equivalent,
    vorticity,
)
from .euler import (
    EulerError,
    Leaf,
    Node,
    Partition,
    cross_invariants,
    euler_partition,
    euler_tree,
    eulerian_normalize_odd,
    invariant_summary,
    leaf_signature,
    odd_euler_partition,
    row_signs,
)
from .spindle import (
    NO_SPINDLE_MESSAGE,
    SpindleResult,
    find_spindle,
    move_circular,
    move_horizontal,
    move_vertical,
    spindle_closure,
    spindle_equivalent,
    spindle_matrix,
)
from .census import (
    CensusError,
    count_signed_weighted_trees,
    count_weighted_trees,
    enumerate_eulerian_graphs,
    enumerate_switching_classes,
    enumerate_trees,
)

__version__ = "0.1.0"
