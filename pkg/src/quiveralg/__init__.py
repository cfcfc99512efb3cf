"""Path algebras of quivers modulo homogeneous relations.

Normal forms via degree-truncated Gröbner bases, graded dimension
matrices, isomorphism invariants and an isomorphism search over graded
(vertex-permuting, arrow-block) maps.
"""

__version__ = "0.1.0"

from .fields import GF, QQ, PrimeField, Rationals, field_from_name
from .quiver import (
    Quiver,
    adjacency_matrix,
    conjugacy_permutations,
    conjugate,
    invert_permutation,
    path_count,
    permutation_matrix,
    relabel,
)
from .pathalg import Path, PathAlgebra, PathPoly
from .groebner import (
    HomogeneousIdeal,
    TruncatedGB,
    TruncationError,
    oracle_dimension_matrices,
    oracle_dimension_matrix,
    prune_low_degree,
    truncated_groebner,
)
from .invariants import IsoCertificate, central_degree_one, iso_necessary, recheck_witness, tangent_dimension
from .isosearch import (
    GradedMap,
    apply_graded_map,
    identity_map,
    is_graded_isomorphism,
    polynomial_extension,
    search_graded_iso,
)
from .dsl import ParseError, format_quiver, parse_quiver
