# -*- coding: utf-8 -*-
"""Checks relating weight functions to the shape of Hessians after a linear substitution."""
from hesslab.calculus import hessian, hessian_determinant
from hesslab.calculus.derivatives import align_fields
from hesslab.exceptions import InvalidArgumentError, PreconditionUnmetError
from hesslab.polys import Polynomial, substitute_linear
from .weight import WeightFn, w_leading_part, wchoice_weights

__all__ = (
    'verify_weight_sum', 'wchoice_leading_is_antidiagonal', 'weights_certify_antitriangular',
    'validate_leading_hypotheses'
)


def validate_leading_hypotheses(f: Polynomial, weights: WeightFn) -> Polynomial:
    """Check the two hypotheses relating ``w`` and ``f`` and return the ``w``-leading part of ``f``.

    :raises `~hesslab.exceptions.PreconditionUnmetError`: if the leading part has a zero Hessian determinant or the
        leading part of the Hessian determinant of ``f`` has no term free of variables.
    """
    leading = w_leading_part(f, weights).part

    if hessian_determinant(leading).is_zero():
        raise PreconditionUnmetError(f'the Hessian determinant of the leading part `{leading}` is zero.')

    determinant = hessian_determinant(f)

    if determinant.is_zero() or not w_leading_part(determinant, weights).part.filter_terms(
        lambda exponents: not any(exponents[:f.n])
    ):
        raise PreconditionUnmetError(
            f'the leading part of the Hessian determinant `{determinant}` has no term free of the variables.'
        )

    return leading


def verify_weight_sum(f: Polynomial, transform, weights: WeightFn) -> bool:
    """Return whether ``w(f(Tx)) = w(x_i) + w(x_(n + 1 - i))`` for every ``i``.

    :param f: the polynomial.
    :param transform: the transform ``T``.
    :param weights: the weight function ``w``.
    :raises `~hesslab.exceptions.PreconditionUnmetError`: if the hypotheses on the leading parts do not hold.
    """
    f, transform = align_fields(f, transform)
    substituted = substitute_linear(f, transform)
    validate_leading_hypotheses(substituted, weights)
    value = weights.of(substituted)

    return all(weights[index] + weights[f.n - 1 - index] == value for index in range(f.n))


def weights_certify_antitriangular(f: Polynomial, transform, weights: WeightFn) -> bool:
    """Return whether the Hessian of ``f(Tx)`` is zero below its anti-diagonal, after checking that the weights force
    it to be: they are strictly increasing and satisfy the hypotheses of :func:`verify_weight_sum`.

    :raises `~hesslab.exceptions.PreconditionUnmetError`: if the weights are not strictly increasing or the hypotheses
        on the leading parts do not hold.
    """
    if not weights.is_strictly_increasing():
        raise PreconditionUnmetError(f'the weights `{weights}` are not strictly increasing.')

    f, transform = align_fields(f, transform)
    substituted = substitute_linear(f, transform)
    validate_leading_hypotheses(substituted, weights)

    return hessian(substituted).is_anti_triangular()


def wchoice_leading_is_antidiagonal(f: Polynomial, transform) -> bool:
    """Return whether, for ``w = wchoice_weights(n, deg f)``, the Hessian of the ``w``-leading part of ``f(Tx)`` is zero
    outside of its anti-diagonal with nonzero constant anti-diagonal entries.

    :raises `~hesslab.exceptions.InvalidArgumentError`: if ``f`` has degree less than two.
    """
    if f.degree < 2:
        raise InvalidArgumentError(f'the polynomial `{f}` has degree less than two.')

    f, transform = align_fields(f, transform)
    weights = wchoice_weights(f.n, f.degree)
    leading = w_leading_part(substitute_linear(f, transform), weights).part
    matrix = hessian(leading)

    return matrix.is_anti_diagonal() and all(
        entry.is_constant() and not entry.is_zero() for entry in matrix.anti_diagonal()
    )
