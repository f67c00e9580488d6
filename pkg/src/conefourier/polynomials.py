"""Dense homogeneous polynomials with exact rational coefficients.

Coefficients are stored against the shared monomial ordering of
:func:`conefourier.geometry.monomial_basis` (lexicographically descending
exponent vectors), which is also how polynomials travel over the wire.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DimensionError
from .geometry import ZERO, as_scalar, as_vector, basis_size, monomial_basis, monomial_index, veronese


@dataclass(frozen=True)
class HomogeneousPolynomial:
    """A homogeneous polynomial in ``dimension`` variables of total
    ``degree``, with one coefficient per monomial basis element."""

    dimension: int
    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(as_scalar(c) for c in self.coefficients))
        expected = basis_size(self.dimension, self.degree)
        if len(self.coefficients) != expected:
            raise DimensionError(
                f"degree-{self.degree} polynomial in {self.dimension} variables "
                f"needs {expected} coefficients, got {len(self.coefficients)}"
            )

    @classmethod
    def zero(cls, dimension: int, degree: int) -> "HomogeneousPolynomial":
        return cls(dimension, degree, (ZERO,) * basis_size(dimension, degree))

    @classmethod
    def constant(cls, dimension: int, value) -> "HomogeneousPolynomial":
        return cls(dimension, 0, (as_scalar(value),))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value of the polynomial at a rational point."""
        values = veronese(as_vector(point), self.degree)
        return sum((c * v for c, v in zip(self.coefficients, values)), ZERO)

    def terms(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        """Yield (exponents, coefficient) for the nonzero terms, in order."""
        for exponents, coeff in zip(monomial_basis(self.dimension, self.degree), self.coefficients):
            if coeff != 0:
                yield exponents, coeff

    def __add__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        if (self.dimension, self.degree) != (other.dimension, other.degree):
            raise DimensionError("can only add polynomials of equal dimension and degree")
        return HomogeneousPolynomial(
            self.dimension, self.degree, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def scale(self, scalar) -> "HomogeneousPolynomial":
        s = as_scalar(scalar)
        return HomogeneousPolynomial(self.dimension, self.degree, tuple(s * c for c in self.coefficients))

    def multiply_linear(self, form: Sequence) -> "HomogeneousPolynomial":
        """Multiply by the linear form <form, xi>, raising the degree by one."""
        f = as_vector(form)
        if len(f) != self.dimension:
            raise DimensionError("linear form has the wrong number of variables")
        target = self.degree + 1
        position = monomial_index(self.dimension, target)
        out = [ZERO] * basis_size(self.dimension, target)
        for exponents, coeff in zip(monomial_basis(self.dimension, self.degree), self.coefficients):
            if coeff == 0:
                continue
            for k in range(self.dimension):
                if f[k] == 0:
                    continue
                bumped = exponents[:k] + (exponents[k] + 1,) + exponents[k + 1 :]
                out[position[bumped]] += coeff * f[k]
        return HomogeneousPolynomial(self.dimension, target, tuple(out))
