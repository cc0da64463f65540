# -*- coding: utf-8 -*-
"""Lower triangular changes of a witness that normalize the linear part of the gradient of ``f(Tx)``.

Replacing ``T`` by ``T L`` with ``L`` lower triangular keeps the Hessian of ``f(Tx)`` zero below its anti-diagonal,
while its value at the origin ``M`` becomes ``L^t M L``. Factoring ``M / c = L0^t J L0`` and taking ``L = L0^-1``
therefore turns it into ``c J``.
"""
import typing

from hesslab.calculus import align_fields, hessian, hessian_determinant
from hesslab.exceptions import PreconditionUnmetError
from hesslab.linalg import ScalarMatrix, Transform, anti_lower_factorize
from hesslab.polys import Field, Polynomial, substitute_linear

__all__ = ('normalize_linear_part', 'match_linear_part', 'constant_hessian_part')


def constant_hessian_part(f: Polynomial, transform: Transform) -> ScalarMatrix:
    """Return the Hessian of ``f(Tx)`` at the origin after checking the witness preconditions.

    :raises `~hesslab.exceptions.PreconditionUnmetError`: if the Hessian determinant of ``f`` is not a nonzero constant
        or the Hessian of ``f(Tx)`` is not zero below its anti-diagonal.
    """
    f, transform = align_fields(f, transform)
    determinant = hessian_determinant(f)

    if not determinant.is_constant() or determinant.is_zero():
        raise PreconditionUnmetError(f'the Hessian determinant `{determinant}` is not a nonzero constant.')

    matrix = hessian(substitute_linear(f, transform))

    if not matrix.is_anti_triangular():
        raise PreconditionUnmetError('the Hessian of `f(Tx)` has nonzero entries below the anti-diagonal.')

    return matrix.constant_part()


def _default_scale(matrix: ScalarMatrix):
    size = matrix.nrows
    if size % 2:
        return matrix[size // 2, size // 2]
    return matrix.field.one


def normalize_linear_part(f: Polynomial, transform: Transform, scale=None) -> typing.Tuple[Transform, typing.Any]:
    """Return a lower triangular ``L`` and ``c`` such that the Hessian of ``f(TLx)`` at the origin is ``c J``.

    :param f: a polynomial whose Hessian determinant is a nonzero constant.
    :param transform: a witness ``T``.
    :param scale: the scalar ``c``; for odd ``n`` it defaults to the middle entry, for even ``n`` to one.
    :return: the pair ``(L, c)``.
    :raises `~hesslab.exceptions.PreconditionUnmetError`: if ``T`` is not a witness for ``f``.
    :raises `~hesslab.exceptions.MiddleEntryNotSquareError`: if a given ``c`` differs from the middle entry by a
        non-square factor.
    """
    matrix = constant_hessian_part(f, transform)
    field = matrix.field
    scale = _default_scale(matrix) if scale is None else field.convert(scale)

    if not scale:
        raise PreconditionUnmetError('the scale of the normalized linear part must be nonzero.')

    factor = anti_lower_factorize(matrix * (field.one / scale))
    lower = Transform(factor.inverse(), inverse=factor)

    flipped = ScalarMatrix.flipped_identity(matrix.nrows, field)

    assert lower.matrix.transpose() * matrix * lower.matrix == flipped * scale

    return lower, scale


def match_linear_part(f: Polynomial, transform: Transform, other: Transform) -> Transform:
    """Return a lower triangular ``P`` such that the Hessians of ``f(TPx)`` and ``f(T'x)`` agree at the origin.

    :param f: a polynomial whose Hessian determinant is a nonzero constant.
    :param transform: a witness ``T``.
    :param other: another witness ``T'``.
    :raises `~hesslab.exceptions.PreconditionUnmetError`: if either transform is not a witness for ``f``.
    :raises `~hesslab.exceptions.MiddleEntryNotSquareError`: if the quotient of the two middle entries is not a square.
    """
    matrix = constant_hessian_part(f, transform)
    target = constant_hessian_part(f, other)
    field = Field.join(matrix.field, target.field)
    matrix, target = matrix.with_field(field), target.with_field(field)

    scale = field.one / _default_scale(matrix)
    factor = anti_lower_factorize(matrix * scale)
    other_factor = anti_lower_factorize(target * scale)
    result = Transform(factor.inverse() * other_factor)

    assert result.matrix.transpose() * matrix * result.matrix == target

    return result
