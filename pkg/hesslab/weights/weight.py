# -*- coding: utf-8 -*-
"""Weight functions on the variables, weighted leading parts and directional walks of the weights."""
import collections
import fractions
import typing

from hesslab.exceptions import InvalidArgumentError, UnstableLeadingPartError, ZeroPolynomialError
from hesslab.polys import Polynomial

__all__ = (
    'WeightFn', 'LeadingPart', 'w_leading_part', 'next_catch_up_step', 'next_critical_step', 'wchoice_weights'
)

LeadingPart = collections.namedtuple('LeadingPart', ['part', 'value'])

Rational = typing.Union[int, fractions.Fraction, str]  # pylint: disable=unsubscriptable-object


class WeightFn:
    """Rational weights of the variables ``x1..xn``; parameters carry no weight.

    The weight of a term is the sum of the weights of its variables counted with multiplicity and the weight of a
    nonzero polynomial is the maximum weight of its terms.
    """

    __slots__ = ('_weights',)

    def __init__(self, weights: typing.Iterable[Rational]):
        """Construct a new instance.

        :param weights: one rational weight per variable, as numbers or strings like ``3/2``.
        :raises `~hesslab.exceptions.InvalidArgumentError`: if no weights are given or a weight is not rational.
        """
        try:
            weights = tuple(fractions.Fraction(weight) for weight in weights)
        except (TypeError, ValueError) as exception:
            raise InvalidArgumentError(f'invalid weights: {exception}') from exception

        if not weights:
            raise InvalidArgumentError('a weight function needs at least one weight.')

        self._weights = weights

    @classmethod
    def uniform(cls, n: int, value: Rational = 1) -> 'WeightFn':
        return cls([value] * n)

    @property
    def weights(self) -> typing.Tuple[fractions.Fraction, ...]:
        return self._weights

    @property
    def n(self) -> int:
        return len(self._weights)

    def __getitem__(self, index: int) -> fractions.Fraction:
        return self._weights[index]

    def __iter__(self):
        return iter(self._weights)

    def __eq__(self, other):
        if isinstance(other, WeightFn):
            return self._weights == other.weights
        if isinstance(other, (tuple, list)):
            return self._weights == tuple(fractions.Fraction(value) for value in other)
        return NotImplemented

    def __hash__(self):
        return hash(self._weights)

    def of_term(self, exponents: typing.Sequence[int]) -> fractions.Fraction:
        """Return the weight of the term with the given exponents; trailing parameter exponents are ignored."""
        return sum((weight * exponent for weight, exponent in zip(self._weights, exponents)), fractions.Fraction(0))

    def of(self, f: Polynomial) -> fractions.Fraction:
        """Return the weight of a nonzero polynomial.

        :raises `~hesslab.exceptions.ZeroPolynomialError`: if the polynomial is zero.
        """
        self._validate(f)
        return max(self.of_term(exponents) for exponents, _ in f.terms())

    def shifted(self, step: Rational, direction: typing.Sequence[Rational]) -> 'WeightFn':
        """Return the weights ``w + step * direction``."""
        step = fractions.Fraction(step)
        return WeightFn(weight + step * fractions.Fraction(delta) for weight, delta in zip(self._weights, direction))

    def is_positive(self) -> bool:
        return all(weight > 0 for weight in self._weights)

    def is_nondecreasing(self) -> bool:
        return all(first <= second for first, second in zip(self._weights, self._weights[1:]))

    def is_strictly_increasing(self) -> bool:
        return all(first < second for first, second in zip(self._weights, self._weights[1:]))

    def to_strings(self) -> typing.List[str]:
        return [str(weight) for weight in self._weights]

    def _validate(self, f: Polynomial):
        if f.n != self.n:
            raise InvalidArgumentError(f'the weight function has {self.n} weights but the polynomial {f.n} variables.')
        if f.is_zero():
            raise ZeroPolynomialError('the zero polynomial has no weight.')

    def __str__(self):
        return f'({", ".join(self.to_strings())})'

    def __repr__(self):
        return f'WeightFn({self.to_strings()})'


def w_leading_part(f: Polynomial, weights: WeightFn) -> LeadingPart:
    """Return the sum of the terms of maximal weight and that weight.

    :param f: a nonzero polynomial.
    :param weights: the weight function.
    :raises `~hesslab.exceptions.ZeroPolynomialError`: if ``f`` is zero.
    """
    value = weights.of(f)
    part = f.filter_terms(lambda exponents: weights.of_term(exponents) == value)
    return LeadingPart(part, value)


def _validated_direction(weights: WeightFn, direction: typing.Sequence[Rational]) -> WeightFn:
    direction = WeightFn(direction)

    if direction.n != weights.n or any(delta < 0 for delta in direction) or not any(direction):
        raise InvalidArgumentError(f'`{direction}` is not a nonzero non-negative direction of length {weights.n}.')

    return direction


def next_catch_up_step(f: Polynomial, weights: WeightFn,
                       direction: typing.Sequence[Rational]) -> typing.Optional[fractions.Fraction]:  # pylint: disable=unsubscriptable-object
    """Return the smallest ``s > 0`` at which a term catches up with the leading part for small steps.

    Moving along ``direction`` the leading part for small ``s > 0`` consists of the terms of the ``w``-leading part
    whose ``direction``-weight ``D`` is maximal, and it stays constant until a term ``t`` of higher direction-weight
    catches up, at ``s = (w(f) - w(t)) / (direction(t) - D)``.

    :param f: a nonzero polynomial.
    :param weights: the starting weights.
    :param direction: a nonzero vector of non-negative rationals, one per variable.
    :return: the step, or ``None`` if no term ever catches up.
    :raises `~hesslab.exceptions.InvalidArgumentError`: if the direction is invalid.
    :raises `~hesslab.exceptions.ZeroPolynomialError`: if ``f`` is zero.
    """
    direction = _validated_direction(weights, direction)
    value = weights.of(f)
    exponents = [key for key, _ in f.terms()]
    maximum = max(direction.of_term(key) for key in exponents if weights.of_term(key) == value)

    steps = [(value - weights.of_term(key)) / (direction.of_term(key) - maximum)
             for key in exponents
             if direction.of_term(key) > maximum]

    return min(steps) if steps else None


def next_critical_step(f: Polynomial, weights: WeightFn,
                       direction: typing.Sequence[Rational]) -> typing.Optional[fractions.Fraction]:  # pylint: disable=unsubscriptable-object
    """Return the smallest ``s > 0`` at which the leading part for ``w + s * direction`` differs from the ``w``-leading
    part.

    The leading part stays the ``w``-leading part for ``0 <= s' < s`` and gains the terms catching up at ``s``.

    :param f: a nonzero polynomial.
    :param weights: the starting weights.
    :param direction: a nonzero vector of non-negative rationals, one per variable.
    :return: the critical step, or ``None`` if no finite step changes the leading part, in which case every term of
        maximal weight also has maximal ``direction``-weight.
    :raises `~hesslab.exceptions.InvalidArgumentError`: if the direction is invalid.
    :raises `~hesslab.exceptions.ZeroPolynomialError`: if ``f`` is zero.
    :raises `~hesslab.exceptions.UnstableLeadingPartError`: if the terms of the ``w``-leading part do not share their
        ``direction``-weight, so the leading part changes for every ``s > 0``.
    """
    direction = _validated_direction(weights, direction)
    leading = w_leading_part(f, weights).part
    values = {direction.of_term(exponents) for exponents, _ in leading.terms()}

    if len(values) > 1:
        raise UnstableLeadingPartError(
            f'the leading part `{leading}` loses terms for every positive step along `{direction}`.'
        )

    return next_catch_up_step(f, weights, direction)


def wchoice_weights(n: int, d: int) -> WeightFn:
    """Return the weights ``d^(i - 1)`` for ``i <= n / 2 + 1`` and ``d^(ceil(n / 2) - 1) + d^floor(n / 2) - d^(n - i)``
    beyond, which are strictly increasing with ``w(x_i) + w(x_(n + 1 - i))`` independent of ``i``.

    :param n: the number of variables, at least one.
    :param d: the base, at least two; typically the degree of the polynomial.
    :raises `~hesslab.exceptions.InvalidArgumentError`: if ``n < 1`` or ``d < 2``.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f'the number of variables must be a positive integer, got `{n}`.')

    if not isinstance(d, int) or d < 2:
        raise InvalidArgumentError(f'the base must be an integer of at least 2, got `{d}`.')

    ceiling = (n + 1) // 2
    floor = n // 2
    weights = []

    for index in range(1, n + 1):
        if 2 * index <= n + 2:
            weights.append(d**(index - 1))
        else:
            weights.append(d**(ceiling - 1) + d**floor - d**(n - index))

    return WeightFn(weights)
