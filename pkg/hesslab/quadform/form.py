# -*- coding: utf-8 -*-
"""Quadratic forms given by a symmetric Gram matrix."""
import typing

from hesslab.calculus import hessian
from hesslab.common.lang import type_check
from hesslab.exceptions import DimensionMismatchError, NotSymmetricError
from hesslab.linalg import ScalarMatrix
from hesslab.polys import Field, Polynomial, PolynomialContext

__all__ = ('QuadraticForm', 'hessian_at')


def hessian_at(f: Polynomial, point: typing.Sequence) -> ScalarMatrix:
    """Return the Hessian matrix of ``f`` evaluated at a point.

    :param f: a polynomial without parameters.
    :param point: one scalar of the field of ``f`` per variable.
    :raises `~hesslab.exceptions.DimensionMismatchError`: if the point has the wrong length.
    """
    if len(point) != f.n:
        raise DimensionMismatchError(f'expected a point with {f.n} coordinates, got {len(point)}.')
    return hessian(f).evaluate(point)


class QuadraticForm:
    """The quadratic form ``q(v) = v^t G v`` for a symmetric Gram matrix ``G``.

    For a polynomial the Gram matrix of its quadratic part is half of its Hessian at the origin.
    """

    __slots__ = ('_gram',)

    def __init__(self, gram: ScalarMatrix):
        type_check(gram, ScalarMatrix)

        if not gram.is_symmetric():
            raise NotSymmetricError('the Gram matrix of a quadratic form must be symmetric.')
        self._gram = gram

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> 'QuadraticForm':
        """Return the quadratic part of ``f`` as a form; terms of other degrees are ignored."""
        quadratic = f.homogeneous_part(2)
        if any(any(exponents[f.n:]) for exponents, _ in quadratic.terms()):
            raise DimensionMismatchError(f'the quadratic part of `{f}` depends on parameters.')
        half = f.field.domain.convert(1) / 2
        return cls(hessian(quadratic).constant_part() * half)

    @classmethod
    def diagonal(cls, coefficients: typing.Sequence, field: Field = Field.Q) -> 'QuadraticForm':
        return cls(ScalarMatrix.diagonal(coefficients, field))

    @property
    def gram(self) -> ScalarMatrix:
        return self._gram

    @property
    def n(self) -> int:
        return self._gram.nrows

    @property
    def field(self) -> Field:
        return self._gram.field

    def evaluate(self, vector: typing.Sequence):
        """Return ``v^t G v``."""
        return self._gram.bilinear(vector, vector)

    def is_degenerate(self) -> bool:
        return not self._gram.determinant()

    def to_polynomial(self, context: PolynomialContext = None) -> Polynomial:
        """Return the homogeneous quadratic polynomial of the form."""
        context = context or PolynomialContext.standard(self.n, field=self.field)
        total = Polynomial(context)
        for row in range(self.n):
            for col in range(self.n):
                value = self._gram[row, col]
                if value:
                    total += Polynomial.variable(context, row) * Polynomial.variable(context, col) * value
        return total

    def __eq__(self, other):
        if not isinstance(other, QuadraticForm):
            return NotImplemented
        return self._gram == other.gram

    def __hash__(self):
        return hash(self._gram)

    def __str__(self):
        return str(self.to_polynomial())

    def __repr__(self):
        return f'QuadraticForm({str(self)!r}, field={self.field.value})'
