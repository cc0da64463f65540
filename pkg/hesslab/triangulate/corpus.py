# -*- coding: utf-8 -*-
"""Random instances with a known answer, used to exercise the triangularization at scale.

Seeds are built with a Hessian that is zero below the anti-diagonal and has nonzero constants on it; conjugating a seed
by a random invertible transform hides that shape, which the pipeline then has to recover.
"""
import random
import typing

from hesslab.exceptions import InvalidArgumentError
from hesslab.linalg import ScalarMatrix, Transform
from hesslab.polys import Field, Polynomial, PolynomialContext, substitute_linear
from .classify import ClassificationTag
from .kernel import directional_kernel

__all__ = (
    'random_antitriangular_seed', 'random_invertible_transform', 'random_conjugated_instance', 'random_zero_hessian'
)

COEFFICIENT_RANGE = 3
TRANSFORM_ENTRY_RANGE = 2


def _nonzero(rng: random.Random) -> int:
    return rng.choice([value for value in range(-COEFFICIENT_RANGE, COEFFICIENT_RANGE + 1) if value])


def _random_polynomial(context: PolynomialContext, variables: typing.Sequence[int], low: int, high: int,
                       rng: random.Random, terms: int = 3) -> Polynomial:
    """Return a sum of random terms in the given variables with degrees between ``low`` and ``high``."""
    total = Polynomial(context)

    if high < low:
        return total

    for _ in range(terms):
        degree = rng.randint(low, high)
        exponents = [0] * len(context.names)
        for _ in range(degree):
            if not variables:
                break
            exponents[rng.choice(variables)] += 1
        if sum(exponents) != degree:
            continue
        total += Polynomial.from_terms(context, {tuple(exponents): rng.randint(-COEFFICIENT_RANGE, COEFFICIENT_RANGE)})

    return total


def random_antitriangular_seed(n: int, degree: int, rng: random.Random, field: Field = Field.Q) -> Polynomial:
    """Return a random ``g`` of the given degree whose Hessian is zero below the anti-diagonal with nonzero constants
    on it.

    With ``m = n // 2`` the seed is ``sum(x_(n+1-i) * (c_i * x_i + P_i(x_1..x_(i-1))))`` over ``i <= m``, plus for odd
    ``n`` the terms ``k * x_h^2 + x_h * P_h(x_1..x_(h-1))`` of the middle variable ``x_h``, plus ``Q(x_1..x_m)``
    which contains ``x_1^degree``.

    :raises `~hesslab.exceptions.InvalidArgumentError`: if ``n < 1``, ``degree < 2`` or a single variable is asked for
        a degree above two.
    """
    if n < 1 or degree < 2 or (n == 1 and degree > 2):
        raise InvalidArgumentError(f'no anti-triangular seed with {n} variables and degree {degree} exists.')

    context = PolynomialContext.standard(n, field=field)
    variables = [Polynomial.variable(context, index) for index in range(n)]
    half = n // 2
    seed = Polynomial(context)

    for index in range(half):
        tail = _random_polynomial(context, range(index), 1, degree - 1, rng)
        seed += variables[n - 1 - index] * (variables[index] * _nonzero(rng) + tail)

    if n % 2:
        middle = half
        tail = _random_polynomial(context, range(middle), 1, degree - 1, rng)
        seed += variables[middle]**2 * _nonzero(rng) + variables[middle] * tail

    seed += _random_polynomial(context, range(half), 2, degree, rng)
    seed += variables[0]**degree * _nonzero(rng)

    if seed.degree != degree or seed.homogeneous_part(degree).is_zero():
        return random_antitriangular_seed(n, degree, rng, field)

    return seed


def random_invertible_transform(n: int, rng: random.Random, field: Field = Field.Q) -> Transform:
    """Return a random invertible transform with small integer entries."""
    while True:
        rows = [[rng.randint(-TRANSFORM_ENTRY_RANGE, TRANSFORM_ENTRY_RANGE) for _ in range(n)] for _ in range(n)]
        matrix = ScalarMatrix(rows, field, n)
        if matrix.determinant():
            return Transform(matrix)


def random_conjugated_instance(n: int, degree: int, rng: random.Random,
                               field: Field = Field.Q) -> typing.Tuple[Polynomial, Polynomial, Transform]:
    """Return ``(f, g, A)`` with a random seed ``g`` and ``f(x) = g(A^-1 x)``, so that ``A`` is a witness for ``f``."""
    seed = random_antitriangular_seed(n, degree, rng, field)
    transform = random_invertible_transform(n, rng, field)
    return substitute_linear(seed, transform.inverted()), seed, transform


def _random_univariate(context: PolynomialContext, low: int, high: int, rng: random.Random) -> Polynomial:
    """Return a random polynomial in ``x1`` with degrees between ``low`` and ``high`` and a nonzero top term."""
    first = Polynomial.variable(context, 0)
    total = first**high * _nonzero(rng)
    for degree in range(low, high):
        total += first**degree * rng.randint(-COEFFICIENT_RANGE, COEFFICIENT_RANGE)
    return total


def random_zero_hessian(tag: ClassificationTag, n: int, degree: int, rng: random.Random,
                        field: Field = Field.Q) -> Polynomial:
    """Return a random polynomial without terms of degree below two in the given zero Hessian class.

    The polynomial is built in adapted coordinates and then conjugated by a random invertible transform; draws that
    fall into a more degenerate class are rejected.

    :raises `~hesslab.exceptions.InvalidArgumentError`: if the class does not exist for ``n`` variables or the degree
        is too small for it.
    """
    if tag is ClassificationTag.NON_DEGENERATE or degree < 2:
        raise InvalidArgumentError(f'cannot draw a zero Hessian polynomial of class `{tag.value}` and degree {degree}.')

    minimum = {ClassificationTag.IN_ONE_FORM: 2, ClassificationTag.IN_TWO_FORMS: 3, ClassificationTag.RANK1_FAMILY: 3}

    if not minimum[tag] <= n <= 3 or (tag is ClassificationTag.RANK1_FAMILY and degree < 3):
        raise InvalidArgumentError(f'the class `{tag.value}` does not occur for {n} variables and degree {degree}.')

    context = PolynomialContext.standard(n, field=field)
    variables = [Polynomial.variable(context, index) for index in range(n)]
    expected = {ClassificationTag.IN_ONE_FORM: n - 1, ClassificationTag.IN_TWO_FORMS: n - 2}

    while True:
        if tag is ClassificationTag.IN_ONE_FORM:
            reduced = _random_univariate(context, 2, degree, rng)
        elif tag is ClassificationTag.IN_TWO_FORMS:
            reduced = _random_polynomial(context, [0, 1], 2, degree, rng, terms=4)
            reduced += variables[1]**degree * _nonzero(rng)
        else:
            reduced = Polynomial(context)
            for index in range(n):
                reduced += _random_univariate(context, 1, degree - 1, rng) * variables[index]

        transform = random_invertible_transform(n, rng, field)
        candidate = substitute_linear(reduced, transform)

        if candidate.is_zero() or any(candidate.term_degree(exponents) < 2 for exponents in candidate.terms_dict()):
            continue

        if len(directional_kernel(candidate)) == expected.get(tag, 0):
            return candidate
