# -*- coding: utf-8 -*-
"""Search for a transform ``T`` and nondecreasing positive weights ``w`` such that the ``w``-leading part of
``f(Tx)`` has a nonzero Hessian determinant.

The search starts from uniform weights and repeats three moves until the leading part is nondegenerate: align ``T``
so that the leading part lives in as few variables as possible with ``x1`` its most repeated linear factor, pick a
direction from the degree ``r`` of the leading part in ``x2``, and walk the weights along that direction to the next
critical step where the leading part gains a term.
"""
import collections
import typing

from hesslab.calculus import hessian_determinant
from hesslab.common.log import HESSLAB_LOGGER
from hesslab.exceptions import (
    BudgetExceededError, UnsupportedDimensionError, ZeroHessianDeterminantError
)
from hesslab.linalg import ScalarMatrix, Transform, complete_basis
from hesslab.polys import Polynomial, substitute_linear
from hesslab.weights import WeightFn, next_catch_up_step, w_leading_part
from .classify import classify_zero_hessian, linear_factors
from .kernel import directional_kernel

__all__ = ('DEFAULT_WEIGHT_BUDGET', 'AdaptedWeight', 'find_adapted_weight')

DEFAULT_WEIGHT_BUDGET = 64

LOGGER = HESSLAB_LOGGER.getChild('triangulate')

AdaptedWeight = collections.namedtuple('AdaptedWeight', ['transform', 'weights', 'leading'])


def _leading(f: Polynomial, transform: Transform, weights: WeightFn) -> Polynomial:
    return w_leading_part(substitute_linear(f, transform), weights).part


def _top_class(weights: WeightFn) -> typing.List[int]:
    top = max(weights)
    return [index for index, weight in enumerate(weights) if weight == top]


def _class_alignment(h: Polynomial, weights: WeightFn) -> typing.Optional[ScalarMatrix]:  # pylint: disable=unsubscriptable-object
    """Return a block transform moving the kernel of ``h`` inside the top weight class onto its last variables."""
    indices = _top_class(weights)

    if len(indices) < 2:
        return None

    kernel = directional_kernel(h, indices)

    if not kernel:
        return None

    field = h.field
    restricted = [tuple(vector[index] for index in indices) for vector in kernel]
    complement = complete_basis(restricted, len(indices), field)
    block = ScalarMatrix.from_columns(complement + restricted, field)

    return block.embed(h.n, indices[0])


def _factor_alignment(h: Polynomial) -> typing.Optional[ScalarMatrix]:  # pylint: disable=unsubscriptable-object
    """Return a transform of ``x1, x2`` moving the most repeated linear factor of ``h`` onto ``x1``."""
    factors = linear_factors(h)

    if not factors:
        return None

    field = h.field
    first, second = factors[0].coefficients[:2]

    if first:
        block = ScalarMatrix([[field.one / first, -second / first], [0, 1]], field)
    else:
        block = ScalarMatrix([[0, 1], [field.one / second, 0]], field)

    return block.embed(h.n, 0)


def _align(f: Polynomial, transform: Transform, weights: WeightFn, strict: bool) -> Transform:
    h = _leading(f, transform, weights)
    n = f.n

    if len(set(weights)) == 1 and strict:
        transform = transform * classify_zero_hessian(h).transform
    else:
        alignment = _class_alignment(h, weights)
        if alignment is not None:
            transform = transform * Transform(alignment)

    h = _leading(f, transform, weights)

    if n >= 2 and weights[0] == weights[1] and h.degree_in(range(2, n)) <= 0:
        alignment = _factor_alignment(h)
        if alignment is not None:
            transform = transform * Transform(alignment)

    return transform


def find_adapted_weight(f: Polynomial, budget: int = DEFAULT_WEIGHT_BUDGET, strict: bool = True) -> AdaptedWeight:
    """Find ``T`` and ``0 < w(x1) <= ... <= w(xn)`` with a nondegenerate ``w``-leading part of ``f(Tx)``.

    :param f: a polynomial with a nonzero Hessian determinant.
    :param budget: the largest number of weight steps.
    :param strict: only accept polynomials in at most three variables; without it the search runs for any number of
        variables as a diagnostic, using kernel alignment only.
    :return: the transform, the weights and the leading part.
    :raises `~hesslab.exceptions.ZeroHessianDeterminantError`: if the Hessian determinant of ``f`` is zero.
    :raises `~hesslab.exceptions.UnsupportedDimensionError`: if ``strict`` and ``f`` has more than three variables.
    :raises `~hesslab.exceptions.NeedsExtensionError`: if an alignment needs a linear form outside the scalar field.
    :raises `~hesslab.exceptions.BudgetExceededError`: if the budget runs out or the walk stalls.
    """
    if strict and f.n > 3:
        raise UnsupportedDimensionError(f'the weight search supports at most three variables, got {f.n}.')

    if hessian_determinant(f).is_zero():
        raise ZeroHessianDeterminantError(f'the Hessian determinant of `{f}` is zero.')

    n = f.n
    transform = Transform.identity(n, f.field)
    weights = WeightFn.uniform(n)

    for step in range(budget):
        leading = _leading(f, transform, weights)

        if not hessian_determinant(leading).is_zero():
            LOGGER.debug('weights %s give the nondegenerate leading part `%s` after %d steps', weights, leading, step)
            return AdaptedWeight(transform, weights, leading)

        transform = _align(f, transform, weights, strict)
        leading = _leading(f, transform, weights)
        degree = leading.degree_in([1]) if n >= 2 else 0
        direction = [0] + [1] * (n - 1) if degree <= 1 else [0] * (n - 1) + [1]

        if not any(direction):
            direction = [1]

        critical = next_catch_up_step(substitute_linear(f, transform), weights, direction)

        LOGGER.debug('step %d: leading part `%s`, r = %d, direction %s, critical step %s', step, leading, degree,
                     direction, critical)

        if critical is None:
            raise BudgetExceededError(
                f'the weight walk stalled at weights `{weights}`.', steps=step, state=(transform, weights)
            )

        weights = weights.shifted(critical, direction)

    raise BudgetExceededError(
        f'no adapted weight found within {budget} steps.', steps=budget, state=(transform, weights)
    )
