# -*- coding: utf-8 -*-
"""Exact determinants of polynomial matrices.

The main routine is fraction-free elimination in the style of Bareiss: every division of step ``k`` is exact in the
polynomial ring, by the pivot of step ``k - 1``, which keeps the degrees of intermediate entries bounded by those of
the minors. Cofactor expansion is kept as an independent oracle.
"""
from hesslab.exceptions import DimensionMismatchError, SizeLimitExceededError
from hesslab.polys import Polynomial
from .matrices import PolyMatrix

__all__ = ('DEFAULT_DETERMINANT_SIZE_LIMIT', 'poly_determinant', 'cofactor_determinant')

DEFAULT_DETERMINANT_SIZE_LIMIT = 8


def _validate(matrix: PolyMatrix, size_limit: int):
    if not matrix.is_square():
        raise DimensionMismatchError(f'the determinant of a non-square {matrix.shape} matrix is not defined.')

    if size_limit is not None and matrix.nrows > size_limit:
        raise SizeLimitExceededError(
            f'the matrix has size {matrix.nrows}, larger than the determinant size limit of {size_limit}.'
        )


def poly_determinant(matrix: PolyMatrix, size_limit: int = DEFAULT_DETERMINANT_SIZE_LIMIT) -> Polynomial:
    """Return the determinant of a square polynomial matrix by fraction-free elimination.

    :param matrix: the square matrix.
    :param size_limit: the largest accepted size, ``None`` to disable the guard.
    :return: the determinant.
    :raises `~hesslab.exceptions.DimensionMismatchError`: if the matrix is not square.
    :raises `~hesslab.exceptions.SizeLimitExceededError`: if the matrix is larger than ``size_limit``.
    """
    _validate(matrix, size_limit)

    context = matrix.context
    ring = context.ring
    size = matrix.nrows

    if not size:
        return Polynomial.constant(context, 1)

    work = [[entry.element for entry in row] for row in matrix.entries]
    sign = 1
    previous = ring.one

    for pivot in range(size - 1):
        if not work[pivot][pivot]:
            swap = next((row for row in range(pivot + 1, size) if work[row][pivot]), None)
            if swap is None:
                return Polynomial(context)
            work[pivot], work[swap] = work[swap], work[pivot]
            sign = -sign

        for row in range(pivot + 1, size):
            for col in range(pivot + 1, size):
                numerator = work[row][col] * work[pivot][pivot] - work[row][pivot] * work[pivot][col]
                work[row][col] = numerator.exquo(previous)

        previous = work[pivot][pivot]

    return Polynomial(context, work[size - 1][size - 1] * sign)


def cofactor_determinant(matrix: PolyMatrix, size_limit: int = DEFAULT_DETERMINANT_SIZE_LIMIT) -> Polynomial:
    """Return the determinant by Laplace expansion along the first row."""
    _validate(matrix, size_limit)

    def expand(rows):
        if not rows:
            return matrix.context.ring.one
        total = matrix.context.ring.zero
        for col, entry in enumerate(rows[0]):
            if not entry:
                continue
            minor = [row[:col] + row[col + 1:] for row in rows[1:]]
            term = entry * expand(minor)
            total = total - term if col % 2 else total + term
        return total

    return Polynomial(matrix.context, expand([[entry.element for entry in row] for row in matrix.entries]))
