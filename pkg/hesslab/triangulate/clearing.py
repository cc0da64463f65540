# -*- coding: utf-8 -*-
"""Clearing the entries below the anti-diagonal of the Hessian of ``f(Tx)`` by block updates of ``T``.

Each round picks the nonzero entry ``(i, j)`` below the anti-diagonal with ``n * i + j`` maximal. For
``j <= ceil(n / 2)`` the constant block with rows ``n + 1 - j..i`` and columns ``n + 1 - i..j`` is multiplied from the
right by a flag complement; otherwise the constant principal block ``n + 1 - i..i`` is transformed by a congruence
built from an isotropic flag. Either update is embedded at offset ``n - i`` and strictly lowers the maximum.
"""
import typing

from hesslab.calculus import PolyMatrix, align_fields, hessian
from hesslab.common.log import HESSLAB_LOGGER
from hesslab.exceptions import HypothesesUnmetError, PreconditionUnmetError
from hesslab.linalg import ScalarMatrix, Transform, isotropic_flag, right_flag_complement
from hesslab.polys import Polynomial, substitute_linear
from hesslab.quadform import DEFAULT_ISOTROPY_HEIGHT, QuadraticForm, isotropy_search
from hesslab.weights import WeightFn, validate_leading_hypotheses
from .witness import AntiTriWitness

__all__ = ('clear_below_antidiagonal', 'isotropy_finder', 'offending_entry')

LOGGER = HESSLAB_LOGGER.getChild('triangulate')


def isotropy_finder(height: int = DEFAULT_ISOTROPY_HEIGHT) -> typing.Callable:
    """Return a callable giving an isotropic vector of a symmetric matrix by a bounded search, or ``None``."""

    def finder(matrix: ScalarMatrix):
        result = isotropy_search(QuadraticForm(matrix), height)
        return result.vector if result.is_isotropic else None

    return finder


def offending_entry(matrix: PolyMatrix) -> typing.Optional[typing.Tuple[int, int]]:  # pylint: disable=unsubscriptable-object
    """Return the nonzero entry ``(i, j)`` with ``i >= j`` and ``i + j > n + 1`` that maximizes ``n * i + j``.

    The indices are one-based.
    Returns ``None`` when the matrix is zero below its anti-diagonal.
    """
    size = matrix.nrows
    best = None

    for row in range(1, size + 1):
        for col in range(1, row + 1):
            if row + col > size + 1 and not matrix[row - 1, col - 1].is_zero():
                if best is None or size * row + col > size * best[0] + best[1]:
                    best = (row, col)

    return best


def _constant_block(matrix: PolyMatrix, rows: typing.Sequence[int], cols: typing.Sequence[int]) -> ScalarMatrix:
    entries = [[matrix[row, col] for col in cols] for row in rows]

    if not all(entry.is_constant() for row in entries for entry in row):
        raise HypothesesUnmetError(
            f'the block at rows {rows[0] + 1}..{rows[-1] + 1} and columns {cols[0] + 1}..{cols[-1] + 1} of the Hessian '
            'is not constant.'
        )

    return ScalarMatrix([[entry.constant_value() for entry in row] for row in entries], matrix.context.field, len(cols))


def clear_below_antidiagonal(
    f: Polynomial,
    transform: Transform,
    weights: WeightFn,
    increase_j: bool = False,
    height: int = DEFAULT_ISOTROPY_HEIGHT,
    case_tag: str = 'weight',
) -> AntiTriWitness:
    """Update ``T`` until the Hessian of ``f(Tx)`` is exactly zero below its anti-diagonal.

    :param f: the polynomial.
    :param transform: a transform ``T`` such that ``w`` and ``f(Tx)`` satisfy the leading part hypotheses.
    :param weights: nondecreasing positive weights.
    :param increase_j: enlarge the column index of the offending entry while the weights allow it.
    :param height: the height bound of the isotropic vector search of the principal block case.
    :param case_tag: the tag of the returned witness.
    :return: the witness with the updated transform.
    :raises `~hesslab.exceptions.HypothesesUnmetError`: if the hypotheses do not hold, which shows as a failing leading
        part check, a non-constant block or a potential that does not decrease.
    :raises `~hesslab.exceptions.SquareRootUnavailableError`: if a principal block has no isotropic vector in the field.
    """
    f, transform = align_fields(f, transform)
    n = f.n
    half = (n + 1) // 2

    try:
        validate_leading_hypotheses(substitute_linear(f, transform), weights)
    except PreconditionUnmetError as exception:
        raise HypothesesUnmetError(str(exception)) from exception

    finder = isotropy_finder(height)
    previous = None

    while True:
        matrix = hessian(substitute_linear(f, transform))
        entry = offending_entry(matrix)

        if entry is None:
            break

        row, col = entry
        potential = n * row + col

        if previous is not None and potential >= previous:
            raise HypothesesUnmetError(f'the potential did not decrease below {previous}, it is {potential}.')

        previous = potential

        if col <= half:
            if increase_j:
                while col + 1 <= half and weights[col] == weights[n - row]:
                    col += 1
            block = _constant_block(matrix, range(n - col, row), range(n - row, col))
            step = right_flag_complement(block)
        else:
            block = _constant_block(matrix, range(n - row, row), range(n - row, row))
            step = isotropic_flag(block, finder)

        LOGGER.debug('clearing entry (%d, %d) with potential %d, block size %d', row, col, potential, block.nrows)

        transform = transform * Transform(step.embed(n, n - row))

    return AntiTriWitness.build(f, transform, weights, case_tag)
