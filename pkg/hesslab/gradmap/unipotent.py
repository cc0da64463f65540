# -*- coding: utf-8 -*-
"""Gradient maps of a witness rearranged to have a unipotent Jacobian."""
from hesslab.calculus import PolyMap, PolyMatrix, align_fields, gradient, jacobian
from hesslab.linalg import Transform
from hesslab.polys import Polynomial, substitute_linear

__all__ = ('verify_unipotent', 'normalized_gradient_map', 'conjugated_gradient_map')


def verify_unipotent(mapping: PolyMap) -> bool:
    """Return whether the Jacobian minus the identity is lower triangular with a zero diagonal.

    When it is, its ``n``-th power is checked to vanish as well.
    """
    matrix = jacobian(mapping)
    difference = matrix - PolyMatrix.identity(mapping.context, matrix.nrows)

    if not difference.is_strictly_lower_triangular():
        return False

    assert (difference**matrix.nrows).is_zero()

    return True


def normalized_gradient_map(f: Polynomial, transform: Transform, scale) -> PolyMap:
    """Return ``c^-1`` times the gradient of ``f(Tx)`` with its components in reverse order."""
    f, transform = align_fields(f, transform)
    return gradient(substitute_linear(f, transform)).reversed().scaled(f.field.one / f.field.convert(scale))


def conjugated_gradient_map(f: Polynomial, transform: Transform) -> PolyMap:
    """Return ``T^-1 (grad f)(Tx)``."""
    f, transform = align_fields(f, transform)
    return gradient(f).substitute_linear(transform).linear_map(transform.inverse)
