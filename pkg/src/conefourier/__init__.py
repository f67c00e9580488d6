"""Exact Fourier transforms of pointed polyhedral cones and polytopes.

Two independent pipelines compute the numerator polynomial of a cone's
Fourier transform: triangulation into simplicial pieces, and interpolation
from exact values at diagonal duals. Polytope transforms are assembled
from vertex tangent cones; a verification layer checks the determinant
identities that make the interpolation system solvable.
"""

from .brion import (
    Polytope,
    PolytopeTransform,
    evaluate_transform,
    polytope_combinatorics,
    polytope_transform,
    tangent_cone,
)
from .cones import (
    Cone,
    Diagonal,
    DiagonalClass,
    DiagonalKind,
    ValidationReport,
    classify_diagonal,
    diagonal_for,
    enumerate_diagonals,
    is_general_position,
    validate_cone,
)
from .errors import ConeFourierError
from .geometry import determinant, generalized_cross, monomial_basis, veronese
from .interpolation import (
    InterpolationSystem,
    SystemRow,
    build_system,
    pk_via_interpolation,
    rhs_value,
    solve_exact,
)
from .polynomials import HomogeneousPolynomial
from .triangulation import (
    ConicTransform,
    Triangulation,
    expand_linear_forms,
    pk_via_triangulation,
    pulling_triangulation,
    simplicial_transform,
)
from .vervan import VerVanRecord, fills, fplus, minor, multiplicity, null_pairing, verify_vervan

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "ConeFourierError",
    "ConicTransform",
    "Diagonal",
    "DiagonalClass",
    "DiagonalKind",
    "HomogeneousPolynomial",
    "InterpolationSystem",
    "Polytope",
    "PolytopeTransform",
    "SystemRow",
    "Triangulation",
    "ValidationReport",
    "VerVanRecord",
    "build_system",
    "classify_diagonal",
    "determinant",
    "diagonal_for",
    "enumerate_diagonals",
    "evaluate_transform",
    "expand_linear_forms",
    "fills",
    "fplus",
    "generalized_cross",
    "is_general_position",
    "minor",
    "monomial_basis",
    "multiplicity",
    "null_pairing",
    "pk_via_interpolation",
    "pk_via_triangulation",
    "polytope_combinatorics",
    "polytope_transform",
    "pulling_triangulation",
    "rhs_value",
    "simplicial_transform",
    "solve_exact",
    "tangent_cone",
    "validate_cone",
    "verify_vervan",
    "veronese",
    "__version__",
]
