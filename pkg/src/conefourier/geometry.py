"""Exact rational linear algebra and the Veronese monomial map.

Scalars are ``fractions.Fraction`` values throughout, so every operation in
this module is exact. Vectors are plain tuples of Fractions, matrices are
sequences of equal-length row vectors, and nothing here mutates its inputs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .errors import DimensionError

Scalar = Fraction
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point input would break exactness; use Fraction")
    return Fraction(value)


def as_vector(coords: Iterable) -> Vector:
    return tuple(as_scalar(c) for c in coords)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dot product of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"difference of lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(scalar, v: Sequence[Fraction]) -> Vector:
    s = as_scalar(scalar)
    return tuple(s * c for c in v)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(c == 0 for c in v)


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square matrix by Gaussian elimination.

    The empty 0x0 matrix has determinant 1.
    """
    m = [[as_scalar(a) for a in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError(f"determinant needs a square matrix, got rows {[len(r) for r in m]}")
    sign = 1
    result = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        result *= m[col][col]
        inv = ONE / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return result if sign > 0 else -result


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rectangular matrix, computed exactly."""
    m = [[as_scalar(a) for a in row] for row in rows]
    if not m:
        return 0
    width = len(m[0])
    if any(len(row) != width for row in m):
        raise DimensionError("rank of a ragged matrix")
    rank = 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = ONE / m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                for c in range(col, width):
                    m[r][c] -= factor * m[rank][c]
        rank += 1
        if rank == len(m):
            break
    return rank


def generalized_cross(vectors: Sequence[Sequence], dimension: int | None = None) -> Vector:
    """The vector r with <r, x> = det(v_1, ..., v_{d-1}, x) for all x.

    Takes exactly d-1 vectors of dimension d and returns their generalized
    cross product, computed from the signed (d-1)-minors of the stacked
    input matrix. Linearly dependent inputs yield the zero vector. The
    ``dimension`` argument is only required when the input list is empty
    (the d = 1 case, where the result is (1,)).
    """
    vs = [as_vector(v) for v in vectors]
    if dimension is None:
        if not vs:
            raise DimensionError("dimension is required for an empty input")
        dimension = len(vs[0])
    if len(vs) != dimension - 1:
        raise DimensionError(f"need {dimension - 1} vectors in dimension {dimension}, got {len(vs)}")
    if any(len(v) != dimension for v in vs):
        raise DimensionError("input vectors must all have the ambient dimension")
    out = []
    for k in range(dimension):
        minor = [v[:k] + v[k + 1 :] for v in vs]
        value = determinant(minor)
        # Sign of the cofactor of x_k when expanding det along the last row.
        out.append(value if (dimension + k) % 2 == 1 else -value)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_basis(dimension: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of the given total degree, lexicographically
    descending.

    This ordering is part of the wire format; for example the degree-2
    basis in three variables is
    (2,0,0), (1,1,0), (1,0,1), (0,2,0), (0,1,1), (0,0,2).
    """
    if dimension < 1 or degree < 0:
        raise DimensionError(f"invalid monomial basis ({dimension}, {degree})")
    if dimension == 1:
        return ((degree,),)
    out = []
    for e in range(degree, -1, -1):
        for rest in monomial_basis(dimension - 1, degree - e):
            out.append((e,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(dimension: int, degree: int) -> dict[tuple[int, ...], int]:
    """Position of each exponent vector within monomial_basis."""
    return {e: i for i, e in enumerate(monomial_basis(dimension, degree))}


def basis_size(dimension: int, degree: int) -> int:
    return comb(dimension + degree - 1, dimension - 1)


def veronese(v: Sequence, degree: int) -> Vector:
    """Evaluate every monomial of the given degree at v, in basis order."""
    vv = as_vector(v)
    out = []
    for exponents in monomial_basis(len(vv), degree):
        term = ONE
        for coord, e in zip(vv, exponents):
            if e:
                term *= coord**e
        out.append(term)
    return tuple(out)
