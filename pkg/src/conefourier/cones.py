"""Pointed polyhedral cones, their diagonals, and exact validation.

A cone is an apex plus an ordered list of n >= d generator rays in
dimension d. A diagonal is a (d-1)-subset of the generators; its dual is
the generalized cross product of the selected rays, the normal vector of
the hyperplane they span. Diagonals classify as extremal (all remaining
generators strictly on one side), interior (generators on both sides), or
degenerate (some generator exactly on the hyperplane, or a zero dual).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .errors import (
    DimensionError,
    DuplicateRayError,
    NotPointedError,
    ZeroGeneratorError,
)
from .feasibility import conic_combination, interior_witness
from .geometry import Vector, as_vector, determinant, dot, generalized_cross, is_zero_vector


@dataclass(frozen=True)
class Cone:
    apex: Vector
    generators: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "apex", as_vector(self.apex))
        object.__setattr__(self, "generators", tuple(as_vector(g) for g in self.generators))
        d = len(self.apex)
        if d < 1:
            raise DimensionError("cone needs a positive ambient dimension")
        for i, g in enumerate(self.generators):
            if len(g) != d:
                raise DimensionError(f"generator {i + 1} has length {len(g)}, expected {d}")
            if is_zero_vector(g):
                raise ZeroGeneratorError(f"generator {i + 1} is the zero vector", index=i + 1)
        if len(self.generators) < d:
            raise DimensionError(
                f"cone in dimension {d} needs at least {d} generators, got {len(self.generators)}"
            )
        for i, j in combinations(range(len(self.generators)), 2):
            if _positive_multiples(self.generators[i], self.generators[j]):
                raise DuplicateRayError(
                    f"generators {i + 1} and {j + 1} span the same ray", indices=(i + 1, j + 1)
                )

    @property
    def dimension(self) -> int:
        return len(self.apex)

    @property
    def num_generators(self) -> int:
        return len(self.generators)


def _positive_multiples(u: Vector, v: Vector) -> bool:
    for i, j in combinations(range(len(u)), 2):
        if u[i] * v[j] != u[j] * v[i]:
            return False
    return dot(u, v) > 0


class DiagonalKind(Enum):
    EXTREMAL = "extremal"
    INTERIOR = "interior"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class DiagonalClass:
    kind: DiagonalKind
    sign: int | None = None  # +1 or -1 for extremal diagonals


@dataclass(frozen=True)
class Diagonal:
    """A (d-1)-subset of generator indices together with its dual vector."""

    indices: tuple[int, ...]
    dual: Vector


@dataclass(frozen=True)
class ValidationReport:
    pointed: bool
    witness: Vector
    general_position: bool
    redundant_generators: tuple[int, ...]


def diagonal_for(cone: Cone, indices: Iterable[int]) -> Diagonal:
    """Build the diagonal on the given (d-1) generator indices."""
    idx = tuple(sorted(indices))
    if len(set(idx)) != len(idx):
        raise DimensionError(f"repeated index in diagonal {idx}")
    if len(idx) != cone.dimension - 1:
        raise DimensionError(
            f"diagonal needs {cone.dimension - 1} indices in dimension {cone.dimension}, got {len(idx)}"
        )
    if idx and (idx[0] < 0 or idx[-1] >= cone.num_generators):
        raise DimensionError(f"diagonal indices {idx} out of range")
    dual = generalized_cross([cone.generators[i] for i in idx], cone.dimension)
    return Diagonal(idx, dual)


def enumerate_diagonals(cone: Cone) -> tuple[Diagonal, ...]:
    """All C(n, d-1) diagonals in lexicographic order of their index sets."""
    return tuple(
        diagonal_for(cone, idx) for idx in combinations(range(cone.num_generators), cone.dimension - 1)
    )


def classify_diagonal(cone: Cone, diagonal: Diagonal) -> DiagonalClass:
    """Classify by the signs of <dual, w_j> over generators off the diagonal.

    All positive gives Extremal(+1), all negative Extremal(-1), mixed signs
    Interior. A zero dual or any vanishing product is Degenerate; neither
    occurs when the cone is in general position.
    """
    if is_zero_vector(diagonal.dual):
        return DiagonalClass(DiagonalKind.DEGENERATE)
    chosen = set(diagonal.indices)
    signs: set[int] = set()
    for j, w in enumerate(cone.generators):
        if j in chosen:
            continue
        value = dot(diagonal.dual, w)
        if value == 0:
            return DiagonalClass(DiagonalKind.DEGENERATE)
        signs.add(1 if value > 0 else -1)
    if len(signs) == 2:
        return DiagonalClass(DiagonalKind.INTERIOR)
    return DiagonalClass(DiagonalKind.EXTREMAL, sign=signs.pop())


def is_general_position(cone: Cone) -> bool:
    """True when every d-subset of generators is linearly independent."""
    return all(
        determinant([cone.generators[i] for i in idx]) != 0
        for idx in combinations(range(cone.num_generators), cone.dimension)
    )


def validate_cone(cone: Cone) -> ValidationReport:
    """Check pointedness and report the cone's degeneracies.

    Pointedness is certified by an explicit rational functional that is
    positive on every generator, found by exact feasibility. Generators
    that are nonnegative combinations of the others are permitted but
    reported as redundant.
    """
    witness = interior_witness(cone.generators)
    if witness is None:
        raise NotPointedError(
            "generators admit a nontrivial nonnegative combination equal to zero; "
            "the cone contains a line"
        )
    redundant = []
    for i in range(cone.num_generators):
        others = [g for j, g in enumerate(cone.generators) if j != i]
        if conic_combination(others, cone.generators[i]) is not None:
            redundant.append(i)
    return ValidationReport(
        pointed=True,
        witness=witness,
        general_position=is_general_position(cone),
        redundant_generators=tuple(redundant),
    )
