# -*- coding: utf-8 -*-
"""Gradients, Hessians and Jacobians, and the identities relating them under linear substitution."""
from hesslab.common.log import HESSLAB_LOGGER
from hesslab.exceptions import DimensionMismatchError
from hesslab.polys import Field, Polynomial, substitute_linear
from .determinant import DEFAULT_DETERMINANT_SIZE_LIMIT, poly_determinant
from .matrices import PolyMap, PolyMatrix

__all__ = (
    'gradient', 'hessian', 'jacobian', 'hessian_determinant', 'check_chain_rule', 'check_determinant_identity',
    'align_fields'
)

LOGGER = HESSLAB_LOGGER.getChild('calculus')


def gradient(f: Polynomial) -> PolyMap:
    """Return the gradient map of ``f``, whose component ``i`` is the partial derivative with respect to ``x_i``."""
    return PolyMap([f.diff(index) for index in range(f.n)], f.context)


def jacobian(mapping: PolyMap) -> PolyMatrix:
    """Return the Jacobian matrix, with row ``i`` the gradient of component ``i``."""
    context = mapping.context
    return PolyMatrix([[component.diff(index) for index in range(context.n)] for component in mapping], context)


def hessian(f: Polynomial) -> PolyMatrix:
    """Return the Hessian matrix of ``f``; it is the Jacobian of the gradient map and exactly symmetric."""
    first = [f.diff(index) for index in range(f.n)]
    rows = [[None] * f.n for _ in range(f.n)]

    for row in range(f.n):
        for col in range(row, f.n):
            rows[row][col] = rows[col][row] = first[row].diff(col)

    return PolyMatrix(rows, f.context)


def hessian_determinant(f: Polynomial, size_limit: int = DEFAULT_DETERMINANT_SIZE_LIMIT) -> Polynomial:
    return poly_determinant(hessian(f), size_limit)


def align_fields(f: Polynomial, transform):
    """Return ``f`` and ``transform`` over the smallest field containing both."""
    field = Field.join(f.field, transform.field)
    if f.field is not field:
        f = f.with_field(field)
    if transform.field is not field:
        transform = transform.with_field(field)
    return f, transform


def check_chain_rule(f: Polynomial, transform) -> bool:
    """Return whether the chain rule identities hold exactly for ``f`` and ``T``.

    The identities are ``grad(f(Tx)) = T^t (grad f)(Tx)`` and ``H(f(Tx)) = T^t (H f)(Tx) T``.

    :param f: the polynomial.
    :param transform: an invertible ``n`` by ``n`` transform.
    :raises `~hesslab.exceptions.DimensionMismatchError`: if the sizes do not match.
    """
    if transform.n != f.n:
        raise DimensionMismatchError(f'a {transform.n}x{transform.n} transform cannot act on {f.n} variables.')

    f, transform = align_fields(f, transform)
    matrix = transform.matrix
    substituted = substitute_linear(f, transform)

    expected_gradient = gradient(f).substitute_linear(transform).linear_map(matrix.transpose())
    gradient_holds = gradient(substituted) == expected_gradient

    expected_hessian = matrix.transpose() * hessian(f).substitute_linear(transform) * matrix
    hessian_holds = hessian(substituted) == expected_hessian

    LOGGER.debug('chain rule for gradient: %s, for Hessian: %s', gradient_holds, hessian_holds)

    return gradient_holds and hessian_holds


def check_determinant_identity(f: Polynomial, transform) -> bool:
    """Return whether ``det H(f(Tx)) = det(T)^2 (det H f)(Tx)`` holds exactly."""
    if transform.n != f.n:
        raise DimensionMismatchError(f'a {transform.n}x{transform.n} transform cannot act on {f.n} variables.')

    f, transform = align_fields(f, transform)
    left = hessian_determinant(substitute_linear(f, transform))
    right = substitute_linear(hessian_determinant(f), transform) * transform.determinant()**2

    return left == right
