# -*- coding: utf-8 -*-
"""Congruence constructions on symmetric matrices.

All routines work with a symmetric matrix ``M`` and produce a matrix ``L`` or ``S`` such that ``L^t J L``, ``S^t M S``
or ``M S`` has a prescribed shape, where ``J`` is the flipped identity. Every result is checked by multiplication
before it is returned.
"""
import math
import typing

from hesslab.common.log import HESSLAB_LOGGER
from hesslab.exceptions import (
    MiddleEntryNotSquareError, NotAntiTriangularError, NotSymmetricError, RankDeficientError,
    SquareRootUnavailableError
)
from hesslab.polys.scalars import gaussian_parts, sqrt_scalar
from .matrix import ScalarMatrix, Transform

__all__ = (
    'anti_lower_factorize', 'diagonalize_symmetric', 'right_flag_complement', 'isotropic_flag', 'find_isotropic_vector',
    'complete_basis'
)

LOGGER = HESSLAB_LOGGER.getChild('linalg')

IsotropicFinder = typing.Callable[[ScalarMatrix], typing.Optional[typing.Sequence]]  # pylint: disable=unsubscriptable-object


def _validate_symmetric(matrix: ScalarMatrix):
    if not matrix.is_symmetric():
        raise NotSymmetricError(f'the matrix is not symmetric:\n{matrix}')


def anti_lower_factorize(matrix: ScalarMatrix) -> ScalarMatrix:
    """Return a lower triangular ``L`` with ``L^t J L = M``.

    With ``m = n // 2`` the matrix decomposes in blocks ``[[A, b, B], [b^t, c^2, 0], [B^t, 0, 0]]`` where the middle
    row and column only exist for odd ``n``. Then ``L = [[I, 0, 0], [0, c, 0], [J A / 2, J b, J B]]``.

    :param matrix: a symmetric matrix that is zero below its anti-diagonal.
    :return: the lower triangular factor.
    :raises `~hesslab.exceptions.NotSymmetricError`: if the matrix is not symmetric.
    :raises `~hesslab.exceptions.NotAntiTriangularError`: if the matrix has a nonzero entry below the anti-diagonal.
    :raises `~hesslab.exceptions.MiddleEntryNotSquareError`: if ``n`` is odd and the middle entry is not a square.
    """
    _validate_symmetric(matrix)

    if not matrix.is_anti_triangular():
        raise NotAntiTriangularError(f'the matrix has nonzero entries below the anti-diagonal:\n{matrix}')

    field = matrix.field
    size = matrix.nrows
    half = size // 2
    rows = [[field.zero] * size for _ in range(size)]

    for index in range(half):
        rows[index][index] = field.one

    if size % 2:
        middle = matrix[half, half]
        root = sqrt_scalar(middle, field)
        if root is None:
            raise MiddleEntryNotSquareError(
                f'the middle entry `{middle}` is not a square in the field `{field.value}`.'
            )
        rows[half][half] = root

    offset = size - half

    # Row ``offset + r`` of ``L`` is row ``half - 1 - r`` of ``[A / 2, b, B]``, which is ``J`` applied to that block.
    for index in range(half):
        source = half - 1 - index
        for col in range(half):
            rows[offset + index][col] = matrix[source, col] / 2
        if size % 2:
            rows[offset + index][half] = matrix[source, half]
        for col in range(half):
            rows[offset + index][offset + col] = matrix[source, offset + col]

    result = ScalarMatrix(rows, field, size)

    assert result.is_lower_triangular()
    assert result.transpose() * ScalarMatrix.flipped_identity(size, field) * result == matrix

    return result


def _clear_denominators(column: typing.List) -> typing.List:
    denominators = [part.denominator for value in column for part in gaussian_parts(value)]
    multiple = 1
    for denominator in denominators:
        multiple = multiple * denominator // math.gcd(multiple, denominator)
    return [value * multiple for value in column]


def diagonalize_symmetric(matrix: ScalarMatrix, unit: bool = False) -> Transform:
    """Return an invertible ``S`` such that ``S^t M S`` is diagonal.

    The congruence is built by symmetric elimination. Without ``unit`` the columns of ``S`` are scaled to have integral
    coordinates; with ``unit`` every nonzero diagonal entry is scaled to one, which needs its square root.

    :param matrix: a symmetric matrix.
    :param unit: scale the nonzero diagonal entries of the result to one.
    :return: the transform ``S``.
    :raises `~hesslab.exceptions.NotSymmetricError`: if the matrix is not symmetric.
    :raises `~hesslab.exceptions.SquareRootUnavailableError`: if ``unit`` is set and a diagonal entry has no root.
    """
    _validate_symmetric(matrix)

    field = matrix.field
    size = matrix.nrows
    work = [list(row) for row in matrix.entries]
    columns = [[field.one if row == col else field.zero for row in range(size)] for col in range(size)]

    def swap(first, second):
        work[first], work[second] = work[second], work[first]
        for row in work:
            row[first], row[second] = row[second], row[first]
        columns[first], columns[second] = columns[second], columns[first]

    def add_multiple(target, source, factor):
        """Add ``factor`` times column and row ``source`` to column and row ``target``."""
        for row in work:
            row[target] += factor * row[source]
        for col in range(size):
            work[target][col] += factor * work[source][col]
        columns[target] = [a + factor * b for a, b in zip(columns[target], columns[source])]

    for pivot in range(size):
        if not work[pivot][pivot]:
            candidate = next((index for index in range(pivot + 1, size) if work[index][index]), None)
            if candidate is not None:
                swap(pivot, candidate)
            else:
                candidate = next((index for index in range(pivot + 1, size) if work[pivot][index]), None)
                if candidate is None:
                    continue
                add_multiple(pivot, candidate, field.one)

        for index in range(pivot + 1, size):
            if work[pivot][index]:
                add_multiple(index, pivot, -work[pivot][index] / work[pivot][pivot])

    for index in range(size):
        if unit:
            value = work[index][index]
            if not value:
                continue
            root = sqrt_scalar(value, field)
            if root is None:
                raise SquareRootUnavailableError(f'the diagonal entry `{value}` is not a square in `{field.value}`.')
            columns[index] = [entry / root for entry in columns[index]]
        else:
            columns[index] = _clear_denominators(columns[index])

    result = Transform(ScalarMatrix.from_columns(columns, field))

    assert (result.matrix.transpose() * matrix * result.matrix).is_diagonal()

    return result


def _unit_vector(size: int, index: int, field) -> typing.Tuple:
    return tuple(field.one if position == index else field.zero for position in range(size))


def right_flag_complement(matrix: ScalarMatrix) -> ScalarMatrix:
    """Return an invertible ``S`` such that ``M S`` is zero below its anti-diagonal.

    The ``q``-th column from the right of ``S`` is chosen orthogonal to the rows ``q + 1, q + 2, ...`` of ``M``, so the
    columns are built right to left inside a growing chain of kernels. Unit vectors of lowest index are preferred, then
    the kernel basis vectors, each taken only if it keeps the chosen columns independent.

    :param matrix: a square matrix.
    :return: the matrix ``S``.
    :raises `~hesslab.exceptions.RankDeficientError`: if no independent column is available at some step.
    """
    field = matrix.field
    size = matrix.nrows
    chosen = []

    for step in range(1, size + 1):
        rows = list(range(step, size))
        constraints = matrix.submatrix(rows, range(size))
        candidates = [_unit_vector(size, index, field) for index in range(size)]
        candidates += constraints.nullspace() if rows else []

        for candidate in candidates:
            if rows and any(constraints.apply(candidate)):
                continue
            if ScalarMatrix.from_columns(chosen + [candidate], field).rank() == len(chosen) + 1:
                chosen.append(candidate)
                break
        else:
            raise RankDeficientError(f'no independent column orthogonal to rows {step + 1}..{size} exists.')

    result = ScalarMatrix.from_columns(list(reversed(chosen)), field)

    assert result.determinant()
    assert (matrix * result).is_anti_triangular()

    return result


def find_isotropic_vector(
    matrix: ScalarMatrix,
    finder: IsotropicFinder = None  # pylint: disable=unsubscriptable-object
) -> typing.Optional[typing.Tuple]:  # pylint: disable=unsubscriptable-object
    """Return a nonzero ``v`` with ``v^t M v = 0`` or ``None`` if none was found.

    Tried in order: a kernel vector, a unit vector with a zero diagonal entry, a pair of diagonal entries of a
    diagonalization whose negated quotient is a square, and finally the optional ``finder``.
    """
    field = matrix.field
    size = matrix.nrows

    kernel = matrix.nullspace()
    if kernel:
        return kernel[0]

    for index in range(size):
        if not matrix[index, index]:
            return _unit_vector(size, index, field)

    transform = diagonalize_symmetric(matrix)
    diagonal = transform.matrix.transpose() * matrix * transform.matrix

    for first in range(size):
        for second in range(first + 1, size):
            ratio = -diagonal[second, second] / diagonal[first, first]
            root = sqrt_scalar(ratio, field)
            if root is not None:
                coordinates = [field.zero] * size
                coordinates[first] = root
                coordinates[second] = field.one
                return transform.matrix.apply(coordinates)

    if finder is not None:
        vector = finder(matrix)
        if vector is not None:
            return tuple(field.convert(value) for value in vector)

    return None


def isotropic_flag(
    matrix: ScalarMatrix,
    finder: IsotropicFinder = None  # pylint: disable=unsubscriptable-object
) -> ScalarMatrix:
    """Return an invertible ``S`` such that ``S^t M S`` is zero below its anti-diagonal.

    The last column of ``S`` is an isotropic vector ``v``. If ``M v`` vanishes, the last row and column of ``S^t M S``
    vanish and the first column can be any complement vector, so only the block of the middle columns has to be zero
    below its own anti-diagonal. Otherwise the first column is the lowest unit vector ``u`` with ``u^t M v != 0`` and
    the middle columns span the vectors orthogonal to both ``M u`` and ``M v``. Both cases recurse on the middle block.

    :param matrix: a symmetric matrix.
    :param finder: optional callable returning an isotropic vector of a matrix or ``None``, used when the cheap
        constructions fail.
    :return: the matrix ``S``.
    :raises `~hesslab.exceptions.NotSymmetricError`: if the matrix is not symmetric.
    :raises `~hesslab.exceptions.SquareRootUnavailableError`: if a block of size two or more has no isotropic vector.
    """
    _validate_symmetric(matrix)

    field = matrix.field
    size = matrix.nrows

    if size <= 1:
        return ScalarMatrix.identity(size, field)

    isotropic = find_isotropic_vector(matrix, finder)

    if isotropic is None:
        raise SquareRootUnavailableError(
            f'the symmetric matrix has no isotropic vector in the field `{field.value}`:\n{matrix}'
        )

    LOGGER.debug('isotropic vector %s for a block of size %d', isotropic, size)

    image = matrix.apply(isotropic)

    if not any(image):
        first, *middle = complete_basis([isotropic], size, field)
    else:
        first = next(_unit_vector(size, index, field) for index in range(size) if image[index])
        constraints = ScalarMatrix([image, matrix.apply(first)], field, size)
        middle = constraints.nullspace()

    columns = [first]
    if middle:
        basis = ScalarMatrix.from_columns(middle, field)
        inner = isotropic_flag(basis.transpose() * matrix * basis, finder)
        columns += (basis * inner).columns()
    columns.append(isotropic)

    result = ScalarMatrix.from_columns(columns, field)

    assert result.determinant()
    assert (result.transpose() * matrix * result).is_anti_triangular()

    return result


def complete_basis(vectors: typing.List[typing.Tuple], size: int, field) -> typing.List[typing.Tuple]:
    """Return the unit vectors of lowest index that complete the given independent vectors to a basis."""
    completion = []
    for index in range(size):
        candidate = _unit_vector(size, index, field)
        if ScalarMatrix.from_columns(vectors + completion + [candidate], field).rank() > len(vectors) + len(completion):
            completion.append(candidate)
        if len(vectors) + len(completion) == size:
            break
    return completion
