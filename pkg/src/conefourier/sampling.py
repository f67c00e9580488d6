"""Seeded random instances for tests, benchmarks, and demos.

Cones are sampled as integer rays over a spherical shell in the first
d-1 coordinates with a positive last coordinate, so they are pointed by
construction; non-generic draws are rejected and resampled. Everything is
driven by a caller-supplied ``random.Random``, so equal seeds give equal
instances.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Sequence

from .cones import Cone, is_general_position
from .geometry import Vector, as_vector, dot


def sample_cone(
    rng: random.Random,
    dimension: int,
    num_generators: int,
    *,
    radius: int = 6,
    max_height: int = 3,
    apex_range: int = 4,
) -> Cone:
    """A random pointed cone in general position with integer generators."""
    d, n = dimension, num_generators
    if d < 2:
        raise ValueError("sampler supports dimension >= 2")
    if n < d:
        raise ValueError("need at least d generators")
    low = max(1, (radius * radius) // 4)
    high = radius * radius
    while True:
        rays: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()
        attempts = 0
        while len(rays) < n and attempts < 5000:
            attempts += 1
            head = tuple(rng.randint(-radius, radius) for _ in range(d - 1))
            norm2 = sum(c * c for c in head)
            if not low <= norm2 <= high:
                continue
            ray = head + (rng.randint(1, max_height),)
            primitive = _primitive(ray)
            if primitive in seen:
                continue
            seen.add(primitive)
            rays.append(ray)
        if len(rays) < n:
            continue
        apex = tuple(Fraction(rng.randint(-apex_range, apex_range)) for _ in range(d))
        cone = Cone(apex, tuple(as_vector(r) for r in rays))
        if is_general_position(cone):
            return cone


def _primitive(ray: tuple[int, ...]) -> tuple[int, ...]:
    g = math.gcd(*ray)
    return tuple(c // g for c in ray)


def sample_family(rng: random.Random, cone: Cone) -> tuple[tuple[int, ...], ...]:
    """A uniform random family of C(n-1, d-1) distinct diagonals."""
    n, d = cone.num_generators, cone.dimension
    diagonals = list(combinations(range(n), d - 1))
    picked = rng.sample(range(len(diagonals)), comb(n - 1, d - 1))
    return tuple(sorted(diagonals[i] for i in picked))


def sample_box(rng: random.Random, dimension: int, *, max_side: int = 5) -> tuple[list[Vector], list[Fraction]]:
    """Vertices of a random axis-aligned box [0, a_1] x ... x [0, a_d],
    plus its side lengths."""
    sides = [Fraction(rng.randint(1, max_side), rng.randint(1, 2)) for _ in range(dimension)]
    vertices = [as_vector(corner) for corner in product(*[(0, a) for a in sides])]
    return vertices, sides


def sample_rational_vector(
    rng: random.Random, dimension: int, *, max_numerator: int = 9, max_denominator: int = 8
) -> Vector:
    out = []
    for _ in range(dimension):
        num = 0
        while num == 0:
            num = rng.randint(-max_numerator, max_numerator)
        out.append(Fraction(num, rng.randint(1, max_denominator)))
    return tuple(out)


def sample_nonsingular_point(
    rng: random.Random, generators: Sequence[Sequence], dimension: int, **kwargs
) -> Vector:
    """A random rational point at which no given linear form vanishes."""
    gens = [as_vector(g) for g in generators]
    while True:
        xi = sample_rational_vector(rng, dimension, **kwargs)
        if all(dot(g, xi) != 0 for g in gens):
            return xi
