# -*- coding: utf-8 -*-
"""Constant directions along which a polynomial does not change, and the transforms that split them off.

A polynomial ``h`` can be written as a polynomial in fewer linear forms than it has variables exactly when there is a
nonzero constant vector ``l`` with ``Jh . l = 0``. Such vectors are the solutions of a linear system over the scalar
field: every monomial occurring in some partial derivative gives one equation.
"""
import typing

from hesslab.exceptions import EmptyKernelError, PreconditionUnmetError
from hesslab.linalg import ScalarMatrix, Transform, complete_basis
from hesslab.polys import Polynomial, substitute_linear

__all__ = ('directional_kernel', 'make_degenerate_transform', 'is_degenerate')


def directional_kernel(h: Polynomial, indices: typing.Sequence[int] = None) -> typing.List[typing.Tuple]:
    """Return an exact basis of the vectors ``l`` with ``sum(l_i * dh/dx_i) = 0``.

    :param h: the polynomial; parameters are treated like scalars of the coefficient system.
    :param indices: optional zero-based indices of the variables ``l`` may be supported on; the returned vectors
        always have one coordinate per variable and vanish outside of ``indices``.
    :return: the basis, empty if and only if ``h`` is nondegenerate with respect to the given variables.
    """
    field = h.field
    indices = tuple(range(h.n)) if indices is None else tuple(indices)
    partials = [h.diff(index).terms_dict() for index in indices]
    monomials = sorted({monomial for partial in partials for monomial in partial})

    rows = [[partial.get(monomial, field.zero) for partial in partials] for monomial in monomials]
    system = ScalarMatrix(rows, field, len(indices))

    basis = []
    for vector in system.nullspace():
        full = [field.zero] * h.n
        for index, value in zip(indices, vector):
            full[index] = value
        basis.append(tuple(full))

    return basis


def is_degenerate(h: Polynomial) -> bool:
    """Return whether ``h`` is a polynomial in fewer linear forms than it has variables."""
    return bool(directional_kernel(h))


def make_degenerate_transform(h: Polynomial, basis: typing.Sequence[typing.Sequence]) -> Transform:
    """Return a transform ``T`` such that ``h(Tx)`` does not depend on the last ``len(basis)`` variables.

    The last columns of ``T`` are the kernel vectors and the first columns complete them with unit vectors.

    :param h: the polynomial.
    :param basis: independent vectors of the directional kernel of ``h``.
    :raises `~hesslab.exceptions.EmptyKernelError`: if the basis is empty.
    :raises `~hesslab.exceptions.PreconditionUnmetError`: if the vectors are not kernel vectors of ``h``.
    """
    if not basis:
        raise EmptyKernelError(f'the polynomial `{h}` has no directional kernel to split off.')

    field = h.field
    basis = [tuple(field.convert(value) for value in vector) for vector in basis]
    complement = complete_basis(basis, h.n, field)
    transform = Transform(ScalarMatrix.from_columns(complement + basis, field))

    if substitute_linear(h, transform).degree_in(range(len(complement), h.n)) > 0:
        raise PreconditionUnmetError(f'the given vectors do not lie in the directional kernel of `{h}`.')

    return transform
