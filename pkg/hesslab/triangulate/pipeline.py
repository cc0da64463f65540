# -*- coding: utf-8 -*-
"""End-to-end search of a transform making the Hessian of ``f(Tx)`` zero below its anti-diagonal for ``n <= 3``."""
import typing

from hesslab.calculus import hessian_determinant
from hesslab.common.log import HESSLAB_LOGGER
from hesslab.exceptions import (
    IsotropyUndecidedError, NonConstantDeterminantError, NotAntiTriangularError, UnsupportedDimensionError
)
from hesslab.linalg import ScalarMatrix, Transform, complete_basis
from hesslab.polys import Polynomial
from hesslab.quadform import DEFAULT_ISOTROPY_HEIGHT, QuadraticForm, isotropy_search
from hesslab.weights import WeightFn
from .classify import classify_zero_hessian
from .clearing import clear_below_antidiagonal
from .weight_search import DEFAULT_WEIGHT_BUDGET, find_adapted_weight
from .witness import AntiTriWitness, IsotropyObstruction

__all__ = ('dillen_pipeline',)

LOGGER = HESSLAB_LOGGER.getChild('triangulate')


def _quadratic_route(f: Polynomial, height: int) -> typing.Union[AntiTriWitness, IsotropyObstruction]:  # pylint: disable=unsubscriptable-object
    form = QuadraticForm.from_polynomial(f)
    isotropy = isotropy_search(form, height)

    if isotropy.is_anisotropic:
        LOGGER.info('the quadratic part of `%s` is anisotropic', f)
        return IsotropyObstruction(f, form, isotropy)

    if not isotropy.is_isotropic:
        raise IsotropyUndecidedError(
            f'the isotropy of the quadratic part of `{f}` is undecided up to height {isotropy.height}.'
        )

    field = f.field
    vector = tuple(field.convert(value) for value in isotropy.vector)
    transform = Transform(ScalarMatrix.from_columns(complete_basis([vector], f.n, field) + [vector], field))

    return clear_below_antidiagonal(f, transform, WeightFn.uniform(f.n), height=height, case_tag='quadratic')


def dillen_pipeline(
    f: Polynomial,
    height: int = DEFAULT_ISOTROPY_HEIGHT,
    budget: int = DEFAULT_WEIGHT_BUDGET,
) -> typing.Union[AntiTriWitness, IsotropyObstruction]:  # pylint: disable=unsubscriptable-object
    """Return a witness ``T`` for ``f`` or prove that the quadratic part rules one out.

    The route depends on ``f``: a zero Hessian determinant is handled by the zero Hessian classification, a quadratic
    ``f`` by an isotropic vector of its quadratic part placed in the last column of ``T``, and higher degrees by the
    weight search followed by the clearing of the entries below the anti-diagonal.

    :param f: a polynomial in one to three variables whose Hessian determinant is a constant.
    :param height: the height bound of isotropic vector searches.
    :param budget: the step budget of the weight search.
    :return: the verified witness, or the obstruction for an anisotropic quadratic ``f``.
    :raises `~hesslab.exceptions.UnsupportedDimensionError`: if ``f`` does not have one, two or three variables.
    :raises `~hesslab.exceptions.NonConstantDeterminantError`: if the Hessian determinant of ``f`` is not constant.
    :raises `~hesslab.exceptions.NeedsExtensionError`: if a needed linear form is not defined over the field.
    :raises `~hesslab.exceptions.IsotropyUndecidedError`: if the isotropy of a quadratic part stays undecided.
    """
    if not 1 <= f.n <= 3:
        raise UnsupportedDimensionError(f'the pipeline supports 1 to 3 variables, got {f.n}.')

    determinant = hessian_determinant(f)

    if not determinant.is_constant():
        raise NonConstantDeterminantError(f'the Hessian determinant `{determinant}` of `{f}` is not constant.')

    if f.n == 1 or f.degree <= 1:
        result = AntiTriWitness.build(f, Transform.identity(f.n, f.field), case_tag='trivial')
    elif determinant.is_zero():
        curved = f.filter_terms(lambda exponents: f.term_degree(exponents) >= 2)
        classification = classify_zero_hessian(curved)
        result = AntiTriWitness.build(f, classification.transform, case_tag='zero_hessian')
    elif f.degree == 2:
        result = _quadratic_route(f, height)
    else:
        adapted = find_adapted_weight(f, budget)
        result = clear_below_antidiagonal(f, adapted.transform, adapted.weights, height=height)

    if isinstance(result, AntiTriWitness) and not result.is_valid():
        raise NotAntiTriangularError(f'the transform found for `{f}` leaves entries below the anti-diagonal.')

    return result
