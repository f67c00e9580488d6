"""Polytope Fourier transforms assembled from vertex tangent cones.

The transform of a polytope is the sum over its vertices of the transforms
of the tangent cones there (Brion decomposition). Each tangent cone
contributes an exact numerator polynomial over its generator linear forms;
only the final evaluation leaves rational arithmetic.

Evaluation uses the analysis convention with kernel e^{2 pi i <x, xi>}:

    f_hat(xi) = sum over vertices v of
        p_K(xi) * e^{2 pi i <v, xi>} / ((-2 pi i)^d * prod(<w, xi>))

which reproduces, for an axis-aligned box, the elementary closed form
prod((e^{2 pi i a_j xi_j} - 1) / (2 pi i xi_j)).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .cones import Cone
from .errors import (
    DegenerateVertexError,
    DimensionError,
    ConeFourierError,
    NonSimplicialFacetError,
    NotFullDimensionalError,
    SingularEvaluationPointError,
)
from .geometry import Vector, as_vector, dot, generalized_cross, is_zero_vector, matrix_rank, vec_sub
from .interpolation import pk_via_interpolation
from .triangulation import ConicTransform, pk_via_triangulation

METHODS = ("triangulation", "interpolation")


@dataclass(frozen=True)
class Polytope:
    """A polytope given by its vertices, with derived facet and adjacency
    data. Facets are vertex index sets; two vertices are adjacent when
    they share at least d-1 facets."""

    vertices: tuple[Vector, ...]
    facets: tuple[tuple[int, ...], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.vertices[0])


@dataclass(frozen=True)
class PolytopeTransform:
    terms: tuple[ConicTransform, ...]


def polytope_combinatorics(vertices: Sequence[Sequence], allow_nonsimplicial: bool = False) -> Polytope:
    """Derive facets and vertex adjacency from a vertex list, by brute
    force over d-subsets spanning supporting hyperplanes.

    Every input point must be a vertex of the hull and the hull must be
    full-dimensional. Supporting hyperplanes through more than d vertices
    are rejected unless ``allow_nonsimplicial`` is set; the relaxation
    covers simple cases such as boxes, whose vertex cones are still
    simplicial even though the facets are not.
    """
    points = tuple(as_vector(v) for v in vertices)
    if not points:
        raise NotFullDimensionalError("no vertices given")
    d = len(points[0])
    if any(len(p) != d for p in points):
        raise DimensionError("vertices have mixed dimensions")
    if len(set(points)) != len(points):
        raise DegenerateVertexError("duplicate vertex in input")
    if matrix_rank([vec_sub(p, points[0]) for p in points[1:]]) < d:
        raise NotFullDimensionalError(f"vertices span less than dimension {d}")

    facets: set[tuple[int, ...]] = set()
    for subset in combinations(range(len(points)), d):
        base = points[subset[0]]
        normal = generalized_cross([vec_sub(points[i], base) for i in subset[1:]], d)
        if is_zero_vector(normal):
            continue
        offset = dot(normal, base)
        positive = negative = False
        coplanar: list[int] = []
        for j, p in enumerate(points):
            if j in subset:
                continue
            value = dot(normal, p) - offset
            if value > 0:
                positive = True
            elif value < 0:
                negative = True
            else:
                coplanar.append(j)
            if positive and negative:
                break
        if positive and negative:
            continue
        facet = tuple(sorted(subset + tuple(coplanar)))
        if coplanar and not allow_nonsimplicial:
            raise NonSimplicialFacetError(
                f"supporting hyperplane contains {len(facet)} > {d} vertices",
                facet=tuple(i + 1 for i in facet),
            )
        facets.add(facet)

    facet_list = tuple(sorted(facets))
    membership = [set() for _ in points]
    for f, facet in enumerate(facet_list):
        for i in facet:
            membership[i].add(f)
    for i, owned in enumerate(membership):
        if not owned:
            raise DegenerateVertexError(
                f"point {i + 1} lies on no facet; it is not a vertex of the hull", index=i + 1
            )
    adjacency = tuple(
        tuple(
            j
            for j in range(len(points))
            if j != i and len(membership[i] & membership[j]) >= d - 1
        )
        for i in range(len(points))
    )
    return Polytope(points, facet_list, adjacency)


def tangent_cone(polytope: Polytope, vertex: int) -> Cone:
    """The cone of feasible directions at a vertex, apexed there; its
    generators are the edge directions toward adjacent vertices."""
    if not 0 <= vertex < len(polytope.vertices):
        raise DimensionError(f"vertex index {vertex} out of range")
    apex = polytope.vertices[vertex]
    return Cone(apex, tuple(vec_sub(polytope.vertices[j], apex) for j in polytope.adjacency[vertex]))


def polytope_transform(polytope: Polytope, method: str = "interpolation") -> PolytopeTransform:
    """One ConicTransform per vertex, numerators computed by the chosen
    pipeline. Per-cone failures are re-raised tagged with the vertex."""
    if method not in METHODS:
        raise DimensionError(f"unknown method {method!r}; expected one of {METHODS}")
    compute = pk_via_triangulation if method == "triangulation" else pk_via_interpolation
    terms = []
    for i in range(len(polytope.vertices)):
        cone = tangent_cone(polytope, i)
        try:
            numerator = compute(cone)
        except ConeFourierError as err:
            err.context["vertex"] = i + 1
            raise
        terms.append(ConicTransform(cone.apex, cone.generators, numerator))
    return PolytopeTransform(tuple(terms))


def evaluate_transform(transform: PolytopeTransform, xi: Sequence) -> complex:
    """Evaluate the assembled transform at a rational point.

    The singularity guard runs in exact arithmetic: every generator linear
    form must be nonzero at xi. Each term's rational part is computed
    exactly and only converted to floating point at the end.
    """
    point = as_vector(xi)
    d = len(point)
    for term in transform.terms:
        for w in term.generators:
            if dot(w, point) == 0:
                raise SingularEvaluationPointError(
                    "a generator linear form vanishes at the evaluation point",
                    vertex=tuple(str(c) for c in term.apex),
                    generator=tuple(str(c) for c in w),
                )
    total = 0j
    for term in transform.terms:
        ratio = term.numerator.evaluate(point)
        for w in term.generators:
            ratio /= dot(w, point)
        phase = cmath.exp(2j * math.pi * float(dot(term.apex, point)))
        total += float(ratio) * phase
    return total / (-2j * math.pi) ** d


def per_term_values(transform: PolytopeTransform, xi: Sequence) -> list[complex]:
    """The individually normalized vertex contributions at xi, in vertex
    order; their sum is evaluate_transform(transform, xi)."""
    point = as_vector(xi)
    d = len(point)
    scale = (-2j * math.pi) ** d
    values = []
    for term in transform.terms:
        ratio = term.numerator.evaluate(point)
        for w in term.generators:
            denom = dot(w, point)
            if denom == 0:
                raise SingularEvaluationPointError(
                    "a generator linear form vanishes at the evaluation point",
                    vertex=tuple(str(c) for c in term.apex),
                    generator=tuple(str(c) for c in w),
                )
            ratio /= denom
        phase = cmath.exp(2j * math.pi * float(dot(term.apex, point)))
        values.append(float(ratio) * phase / scale)
    return values
