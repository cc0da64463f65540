# -*- coding: utf-8 -*-
"""Classification of polynomials in at most three variables whose Hessian determinant is zero.

Such a polynomial without terms of degree less than two is a polynomial in one linear form, a polynomial in two linear
forms, or, only for three variables, of the shape ``g1(l1) * x1 + g2(l1) * x2 + g3(l1) * x3`` whose leading homogeneous
part is ``l1^(d - 1) * l4``. Every classification carries the data to rebuild the polynomial and is checked that way
before it is returned.
"""
import dataclasses
import enum
import typing

from hesslab.calculus import hessian_determinant
from hesslab.common.log import HESSLAB_LOGGER
from hesslab.exceptions import (
    NeedsExtensionError, NotZeroHessianError, PreconditionUnmetError, UnsupportedDimensionError
)
from hesslab.linalg import ScalarMatrix, Transform, complete_basis
from hesslab.polys import Polynomial, scalar_sort_key, substitute_linear
from .kernel import directional_kernel, make_degenerate_transform

__all__ = ('ClassificationTag', 'Classification', 'LinearFactor', 'linear_factors', 'classify_zero_hessian',
           'classify_polynomial')

LOGGER = HESSLAB_LOGGER.getChild('triangulate')


class ClassificationTag(enum.Enum):

    IN_ONE_FORM = 'InOneForm'
    IN_TWO_FORMS = 'InTwoForms'
    RANK1_FAMILY = 'Rank1Family'
    NON_DEGENERATE = 'NonDegenerate'


class LinearFactor(typing.NamedTuple):
    """A linear form dividing a homogeneous polynomial, normalized to a leading coefficient of one."""

    coefficients: typing.Tuple
    multiplicity: int


def _linear_forms(context, rows) -> typing.Tuple[Polynomial, ...]:
    return tuple(Polynomial.linear_form(context, row) for row in rows)


@dataclasses.dataclass(frozen=True)
class Classification:
    """The class of a polynomial together with the data that rebuilds it.

    :param tag: the class.
    :param polynomial: the classified polynomial ``h``.
    :param forms: the linear forms ``l1`` (and ``l2``) for the degenerate classes, ``l1`` and ``l4`` for the rank one
        family.
    :param family: for the rank one family the univariate polynomials ``g1, g2, g3``, written in ``x1``.
    :param transform: the transform ``T`` whose inverse has the forms as its first rows.
    :param reduced: for the degenerate classes the polynomial ``h(Tx)`` in the first one or two variables.
    """

    tag: ClassificationTag
    polynomial: Polynomial
    forms: typing.Tuple[Polynomial, ...] = ()
    family: typing.Tuple[Polynomial, ...] = ()
    transform: typing.Optional[Transform] = None  # pylint: disable=unsubscriptable-object
    reduced: typing.Optional[Polynomial] = None  # pylint: disable=unsubscriptable-object

    def reconstruct(self) -> Polynomial:
        """Return the polynomial rebuilt from the forms and the reduced polynomial or the family."""
        context = self.polynomial.context

        if self.tag is ClassificationTag.NON_DEGENERATE:
            return self.polynomial

        if self.tag is ClassificationTag.RANK1_FAMILY:
            first = self.forms[0]
            images = [first] + [Polynomial.variable(context, index) for index in range(1, context.n)]
            total = Polynomial(context)
            for index, component in enumerate(self.family):
                total += component.compose(images) * Polynomial.variable(context, index)
            return total

        return self.reduced.compose(_linear_forms(context, self.transform.inverse.entries))

    def to_record(self) -> dict:
        record = {
            'case_tag': self.tag.value,
            'polynomial': str(self.polynomial),
            'forms': [str(form) for form in self.forms],
        }
        if self.family:
            record['family'] = [str(component) for component in self.family]
        if self.transform is not None:
            record['T'] = self.transform.matrix.to_strings()
            record['T_inverse'] = self.transform.inverse.to_strings()
        if self.reduced is not None:
            record['reduced'] = str(self.reduced)
        return record


def linear_factors(h: Polynomial) -> typing.List[LinearFactor]:
    """Return the linear factors over the scalar field of the leading homogeneous part of ``h``.

    The factors are sorted by decreasing multiplicity and then by their normalized coefficients, so the first entry is
    the lexicographically least among the factors of highest multiplicity.
    """
    if h.is_zero():
        return []

    leading = h.homogeneous_part(h.degree)
    _, factors = leading.element.factor_list()
    result = []

    for factor, multiplicity in factors:
        candidate = Polynomial(h.context, factor)
        if candidate.degree != 1:
            continue
        try:
            coefficients = candidate.linear_coefficients()
        except ValueError:
            continue
        pivot = next(value for value in coefficients if value)
        result.append(LinearFactor(tuple(value / pivot for value in coefficients), multiplicity))

    def key(item: LinearFactor):
        return -item.multiplicity, [scalar_sort_key(value) for value in item.coefficients]

    return sorted(result, key=key)


def _classify_degenerate(h: Polynomial, basis: typing.List[typing.Tuple]) -> Classification:
    transform = make_degenerate_transform(h, basis)
    reduced = substitute_linear(h, transform)
    count = max(h.n - len(basis), 1)
    forms = _linear_forms(h.context, transform.inverse.entries[:count])
    tag = ClassificationTag.IN_ONE_FORM if count == 1 else ClassificationTag.IN_TWO_FORMS
    return Classification(tag, h, forms, transform=transform, reduced=reduced)


def _rank1_candidate(h: Polynomial, first: typing.Tuple) -> typing.Optional[Classification]:  # pylint: disable=unsubscriptable-object
    """Return the rank one classification with ``l1`` given by ``first``, or ``None`` if ``h`` does not fit."""
    context = h.context
    field = h.field
    n = h.n
    rows = [first] + complete_basis([first], n, field)
    inverse = ScalarMatrix(rows, field, n)
    transform = Transform(inverse.inverse(), inverse=inverse)
    substituted = substitute_linear(h, transform)

    if any(sum(exponents[1:n]) > 1 for exponents in substituted.terms_dict()):
        return None

    variables = [Polynomial.variable(context, index) for index in range(n)]
    coefficients = [substituted.filter_terms(lambda exponents: not any(exponents[1:n])).exquo(variables[0])]

    for index in range(1, n):
        part = substituted.filter_terms(lambda exponents, index=index: exponents[index] == 1)
        coefficients.append(part.exquo(variables[index]))

    zero = Polynomial(context)
    family = tuple(
        sum((coefficient * inverse[row, col] for row, coefficient in enumerate(coefficients)), zero)
        for col in range(n)
    )

    degree = h.degree
    l1 = Polynomial.linear_form(context, first)
    l4 = Polynomial.linear_form(
        context, [component.terms_dict().get((degree - 1,) + (0,) * (len(context.names) - 1), field.zero)
                  for component in family]
    )

    classification = Classification(ClassificationTag.RANK1_FAMILY, h, (l1, l4), family, transform)

    if classification.reconstruct() != h or h.homogeneous_part(degree) != l1**(degree - 1) * l4:
        return None

    return classification


def _classify_rank1(h: Polynomial) -> Classification:
    degree = h.degree

    for factor in linear_factors(h):
        if factor.multiplicity < degree - 1:
            break
        classification = _rank1_candidate(h, factor.coefficients)
        if classification is not None:
            LOGGER.debug('`%s` is in the rank one family of `%s`', h, classification.forms[0])
            return classification

    raise NeedsExtensionError(
        f'the leading form of `{h}` has no repeated linear factor over the field `{h.field.value}`.'
    )


def classify_zero_hessian(h: Polynomial) -> Classification:
    """Classify a polynomial in at most three variables with a zero Hessian determinant.

    :param h: a polynomial without terms of degree less than two.
    :return: the verified classification.
    :raises `~hesslab.exceptions.UnsupportedDimensionError`: if ``h`` does not have one, two or three variables.
    :raises `~hesslab.exceptions.PreconditionUnmetError`: if ``h`` has terms of degree less than two.
    :raises `~hesslab.exceptions.NotZeroHessianError`: if the Hessian determinant of ``h`` is not zero.
    :raises `~hesslab.exceptions.NeedsExtensionError`: if the form ``l1`` of the rank one family is not defined over the
        scalar field.
    """
    if not 1 <= h.n <= 3:
        raise UnsupportedDimensionError(f'zero Hessians can only be classified in 1 to 3 variables, got {h.n}.')

    if any(h.term_degree(exponents) < 2 for exponents in h.terms_dict()):
        raise PreconditionUnmetError(f'the polynomial `{h}` has terms of degree less than two.')

    determinant = hessian_determinant(h)

    if not determinant.is_zero():
        raise NotZeroHessianError(f'the Hessian determinant of `{h}` is `{determinant}`, not zero.')

    basis = directional_kernel(h)

    if basis:
        classification = _classify_degenerate(h, basis)
    elif h.n == 3:
        classification = _classify_rank1(h)
    else:
        raise PreconditionUnmetError(f'the polynomial `{h}` has a zero Hessian but no directional kernel.')

    assert classification.reconstruct() == h

    return classification


def classify_polynomial(h: Polynomial) -> Classification:
    """Classify ``h``, reporting a nonzero Hessian determinant as the nondegenerate class instead of failing."""
    if not hessian_determinant(h).is_zero():
        return Classification(ClassificationTag.NON_DEGENERATE, h)
    return classify_zero_hessian(h)
