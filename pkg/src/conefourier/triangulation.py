"""Cone Fourier transform numerators via triangulation.

Splitting a cone into simplicial pieces and summing the pieces' transforms
over the common denominator prod(<w_i, xi>) yields the numerator
polynomial p_K directly:

    p_K = sum over simplices S of |det(S)| * prod(<w_j, xi> for j not in S)

This is the reference pipeline that the interpolation route is checked
against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cones import Cone, DiagonalKind, classify_diagonal, enumerate_diagonals, is_general_position
from .errors import DimensionError, NotGenericError, SingularSimplexError
from .geometry import Vector, determinant
from .polynomials import HomogeneousPolynomial


@dataclass(frozen=True)
class Triangulation:
    """Simplicial pieces of a cone, each a sorted d-subset of generator indices."""

    simplices: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ConicTransform:
    """The exact data of a cone's Fourier transform: the numerator
    polynomial over the product of generator linear forms, with the phase
    factor attached to the apex."""

    apex: Vector
    generators: tuple[Vector, ...]
    numerator: HomogeneousPolynomial


def pulling_triangulation(cone: Cone, anchor: int = 0) -> Triangulation:
    """Triangulate by coning the anchor generator over the facets that
    avoid it.

    Under general position the facets of the cone are exactly its extremal
    diagonals, so the pieces are {anchor} united with each extremal
    diagonal not containing the anchor. Any anchor index works; the
    resulting numerator polynomial does not depend on the choice.
    """
    if not 0 <= anchor < cone.num_generators:
        raise DimensionError(f"anchor index {anchor} out of range")
    if not is_general_position(cone):
        raise NotGenericError("cone has a linearly dependent d-subset of generators")
    simplices = []
    for diagonal in enumerate_diagonals(cone):
        if anchor in diagonal.indices:
            continue
        if classify_diagonal(cone, diagonal).kind is DiagonalKind.EXTREMAL:
            simplices.append(tuple(sorted(diagonal.indices + (anchor,))))
    return Triangulation(tuple(simplices))


def simplicial_transform(cone: Cone, simplex: Sequence[int]) -> ConicTransform:
    """Transform of the simplicial cone on a d-subset of the generators:
    the numerator is the constant |det| of the selected rays."""
    idx = tuple(sorted(simplex))
    if len(idx) != cone.dimension:
        raise DimensionError(f"simplex needs {cone.dimension} indices, got {len(idx)}")
    rays = tuple(cone.generators[i] for i in idx)
    det = determinant(rays)
    if det == 0:
        raise SingularSimplexError(f"generators {tuple(i + 1 for i in idx)} are dependent")
    return ConicTransform(cone.apex, rays, HomogeneousPolynomial.constant(cone.dimension, abs(det)))


def expand_linear_forms(forms: Sequence[Sequence], dimension: int) -> HomogeneousPolynomial:
    """Expand prod(<v, xi>) over the given vectors into a dense polynomial.

    The empty product is the constant 1.
    """
    poly = HomogeneousPolynomial.constant(dimension, 1)
    for form in forms:
        poly = poly.multiply_linear(form)
    return poly


def pk_via_triangulation(cone: Cone, anchor: int = 0) -> HomogeneousPolynomial:
    """Numerator polynomial of the cone transform, degree n - d, by
    summing |det(S)| * prod(<w_j, xi>, j not in S) over a pulling
    triangulation."""
    triangulation = pulling_triangulation(cone, anchor)
    total = HomogeneousPolynomial.zero(cone.dimension, cone.num_generators - cone.dimension)
    for simplex in triangulation.simplices:
        chosen = set(simplex)
        volume = abs(determinant([cone.generators[i] for i in simplex]))
        missing = [w for j, w in enumerate(cone.generators) if j not in chosen]
        total = total + expand_linear_forms(missing, cone.dimension).scale(volume)
    return total
