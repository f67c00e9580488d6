"""Determinant identities of the diagonal interpolation matrix.

The maximal minors of the interpolation matrix factor combinatorially. For
a family of C(n-1, d-1) diagonals, a d-simplex of generators containing no
family member forces the minor to vanish: the coefficient vector of the
product of linear forms over the complementary generators, built here by
``fplus``, is an explicit null vector. Families touching every simplex
("filling" families) are checked against the signed product of simplex
determinants raised to multiplicity minus one:

    |minor| = prod over d-subsets E of |det(E)| ** (mult(E) - 1)

where mult(E) counts the family members contained in E. Filling alone does
not guarantee a nonzero minor, though: a family routing more than
dim Sym^(n-d)(R^(d-1)) diagonals through one generator pins their duals to
a hyperplane whose Veronese image is too small, so those rows are
dependent and the minor vanishes identically, product formula
notwithstanding. ``verify_vervan`` surfaces such falsifying families as
``VerificationFailureError``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Sequence

from .cones import Cone, diagonal_for
from .errors import DimensionError, VerificationFailureError
from .geometry import ONE, ZERO, Vector, as_vector, determinant, dot, monomial_index, veronese

Family = tuple[tuple[int, ...], ...]


def normalize_family(family: Sequence[Sequence[int]]) -> Family:
    """Sort a family of diagonals lexicographically and reject repeats."""
    normalized = tuple(sorted(tuple(sorted(d)) for d in family))
    sizes = {len(d) for d in normalized}
    if len(sizes) > 1:
        raise DimensionError("family mixes diagonals of different sizes")
    if len(set(normalized)) != len(normalized):
        raise DimensionError("family contains a repeated diagonal")
    return normalized


def multiplicity(family: Sequence[Sequence[int]], simplex: Sequence[int]) -> int:
    """Number of family members contained in the given d-subset."""
    simplex_set = set(simplex)
    return sum(1 for d in family if set(d) <= simplex_set)


def fills(family: Sequence[Sequence[int]], num_generators: int) -> bool:
    """True when every d-subset of generators contains a family member."""
    fam = normalize_family(family)
    dimension = len(fam[0]) + 1
    members = [set(d) for d in fam]
    return all(
        any(member <= set(simplex) for member in members)
        for simplex in combinations(range(num_generators), dimension)
    )


def minor(cone: Cone, family: Sequence[Sequence[int]]) -> Fraction:
    """Determinant of the square matrix of Veronese-expanded duals, one
    row per family diagonal in lexicographic order."""
    fam = normalize_family(family)
    n, d = cone.num_generators, cone.dimension
    expected = comb(n - 1, d - 1)
    if len(fam) != expected:
        raise DimensionError(f"family needs {expected} diagonals, got {len(fam)}")
    degree = n - d
    rows = [veronese(diagonal_for(cone, idx).dual, degree) for idx in fam]
    return determinant(rows)


@dataclass(frozen=True)
class VerVanRecord:
    """Both sides of the minor identity for one family, plus the
    multiplicity table that feeds the filling branch."""

    family: Family
    fills: bool
    minor: Fraction
    expected_abs: Fraction
    sign: int
    multiplicities: tuple[tuple[tuple[int, ...], int, Fraction], ...]


def verify_vervan(cone: Cone, family: Sequence[Sequence[int]]) -> VerVanRecord:
    """Check the minor identity for one family on one cone.

    Non-filling families must have a vanishing minor; filling families
    are checked against the determinant product in absolute value, the
    sign being recorded rather than predicted. A mismatch raises
    VerificationFailureError with the full counterexample attached. The
    non-filling branch holds unconditionally, but filling families can
    fail it: overloading a vertex star forces an identically zero minor
    (see the module docstring), and the error is how such falsifying
    families are reported.
    """
    fam = normalize_family(family)
    value = minor(cone, fam)
    n, d = cone.num_generators, cone.dimension
    table = []
    for simplex in combinations(range(n), d):
        det = determinant([cone.generators[i] for i in simplex])
        table.append((simplex, multiplicity(fam, simplex), det))
    filled = all(mult >= 1 for _, mult, _ in table)
    if filled:
        expected = ONE
        for _, mult, det in table:
            expected *= abs(det) ** (mult - 1)
        ok = abs(value) == expected
    else:
        expected = ZERO
        ok = value == 0
    if not ok:
        raise VerificationFailureError(
            "minor identity failed",
            family=fam,
            fills=filled,
            minor=value,
            expected_abs=expected,
        )
    return VerVanRecord(
        family=fam,
        fills=filled,
        minor=value,
        expected_abs=expected,
        sign=0 if value == 0 else (1 if value > 0 else -1),
        multiplicities=tuple(table),
    )


def fplus(vectors: Sequence[Sequence], dimension: int) -> Vector:
    """Coefficient vector, in monomial basis order, of the product of
    linear forms prod(<v, xi>) over the given vectors.

    Built combinatorially: the coordinate at exponent vector x sums, over
    all ways of picking one coordinate index from each vector so that
    index k is picked x_k times in total, the product of the picked
    coordinates. Pairing this against a Veronese-expanded point factors
    back into the product of the linear forms at that point, which is what
    makes it a null vector for duals of intersecting diagonals.
    """
    vs = [as_vector(v) for v in vectors]
    if any(len(v) != dimension for v in vs):
        raise DimensionError("all vectors must have the ambient dimension")
    m = len(vs)
    position = monomial_index(dimension, m)
    out = [ZERO] * len(position)
    for picks in product(range(dimension), repeat=m):
        exponents = [0] * dimension
        term = ONE
        for v, k in zip(vs, picks):
            exponents[k] += 1
            term *= v[k]
        out[position[tuple(exponents)]] += term
    return tuple(out)


def null_pairing(vectors: Sequence[Sequence], dual: Sequence) -> Fraction:
    """<fplus(vectors), veronese(dual)>, which equals prod(<v, dual>).

    Zero exactly when some vector is orthogonal to the dual, in particular
    whenever the vectors include a generator of the dual's diagonal.
    """
    vs = [as_vector(v) for v in vectors]
    dual_vec = as_vector(dual)
    return dot(fplus(vs, len(dual_vec)), veronese(dual_vec, len(vs)))
