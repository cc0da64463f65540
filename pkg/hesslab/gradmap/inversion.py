# -*- coding: utf-8 -*-
"""Exact inversion of polynomial maps whose Jacobian is anti-triangular with constants on the anti-diagonal.

If the Jacobian is zero below the anti-diagonal, component ``n - k`` only depends on ``x1..xk`` and is linear in
``xk`` with a constant coefficient, so the variables can be solved one by one starting with ``x1``. If instead the
Jacobian is zero above the anti-diagonal, the same works starting with ``xn``. Inverses of maps of the first shape have
the second shape, so every computed inverse can be inverted again.
"""
import dataclasses
import typing

from hesslab.calculus import PolyMap, PolyMatrix, jacobian
from hesslab.common.log import HESSLAB_LOGGER
from hesslab.exceptions import (
    DegreeLimitExceededError, DimensionMismatchError, NonConstantAntiDiagonalError, NotAntiTriangularError
)
from hesslab.polys import Polynomial, format_scalar

__all__ = ('DEFAULT_DEGREE_LIMIT', 'InverseWitness', 'invert_antitriangular')

DEFAULT_DEGREE_LIMIT = 512

LOGGER = HESSLAB_LOGGER.getChild('gradmap')


@dataclasses.dataclass(frozen=True)
class InverseWitness:
    """The inverse ``G`` of a map ``F`` and the anti-diagonal constants of the Jacobian of ``F``."""

    inverse: PolyMap
    constants: typing.Tuple

    def to_record(self) -> dict:
        return {'G': self.inverse.to_strings(), 'constants': [format_scalar(value) for value in self.constants]}


def _is_zero_where(matrix: PolyMatrix, predicate: typing.Callable[[int, int], bool]) -> bool:
    size = matrix.nrows
    return all(matrix[row, col].is_zero() for row in range(size) for col in range(size) if predicate(row, col))


def _solving_order(matrix: PolyMatrix) -> typing.List[int]:
    """Return the order in which the variables are solved, raising if the Jacobian has neither shape."""
    size = matrix.nrows

    if _is_zero_where(matrix, lambda row, col: row + col > size - 1):
        return list(range(size))

    if _is_zero_where(matrix, lambda row, col: row + col < size - 1):
        return list(reversed(range(size)))

    raise NotAntiTriangularError('the Jacobian is zero neither below nor above its anti-diagonal.')


def invert_antitriangular(mapping: PolyMap, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> InverseWitness:
    """Return the inverse of a map with an anti-triangular Jacobian by back substitution.

    :param mapping: the map ``F`` with one component per variable.
    :param degree_limit: the largest degree allowed for a component of the inverse.
    :return: the inverse ``G`` with ``F(G(x)) = G(F(x)) = x``, verified exactly.
    :raises `~hesslab.exceptions.NotAntiTriangularError`: if the Jacobian is zero neither below nor above its
        anti-diagonal.
    :raises `~hesslab.exceptions.NonConstantAntiDiagonalError`: if an anti-diagonal entry is not a nonzero constant.
    :raises `~hesslab.exceptions.DegreeLimitExceededError`: if a component of the inverse exceeds the degree limit.
    """
    context = mapping.context
    size = context.n

    if mapping.n != size:
        raise DimensionMismatchError(f'a map with {mapping.n} components in {size} variables cannot be inverted.')

    matrix = jacobian(mapping)
    order = _solving_order(matrix)
    variables = [Polynomial.variable(context, index) for index in range(size)]
    solved = list(variables)
    constants = [None] * size

    for variable in order:
        component = size - 1 - variable
        entry = matrix[component, variable]

        if not entry.is_constant() or entry.is_zero():
            raise NonConstantAntiDiagonalError(
                f'the anti-diagonal entry ({component + 1}, {variable + 1}) of the Jacobian is `{entry}`, '
                'not a nonzero constant.'
            )

        constant = entry.constant_value()
        rest = mapping[component] - variables[variable] * constant
        solved[variable] = (variables[component] - rest.compose(solved)) * (context.field.one / constant)
        constants[variable] = constant

        if solved[variable].degree > degree_limit:
            raise DegreeLimitExceededError(
                f'the inverse component for `x{variable + 1}` has degree {solved[variable].degree}, above the limit '
                f'{degree_limit}.'
            )

        LOGGER.debug('solved x%d = %s', variable + 1, solved[variable])

    inverse = PolyMap(solved, context)

    assert mapping.compose(inverse).is_identity()
    assert inverse.compose(mapping).is_identity()

    return InverseWitness(inverse, tuple(constants))
