# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.weights.weight` module."""
import fractions

import pytest

from hesslab.exceptions import InvalidArgumentError, UnstableLeadingPartError, ZeroPolynomialError
from hesslab.polys import Polynomial, PolynomialContext
from hesslab.weights import WeightFn, next_catch_up_step, next_critical_step, w_leading_part, wchoice_weights


def test_constructor():
    """Test the constructor of `WeightFn`."""
    weights = WeightFn([1, '3/2', fractions.Fraction(2)])
    assert weights.weights == (1, fractions.Fraction(3, 2), 2)
    assert weights == (1, '3/2', 2)
    assert str(weights) == '(1, 3/2, 2)'

    with pytest.raises(InvalidArgumentError, match=r'invalid weights'):
        WeightFn(['a'])

    with pytest.raises(InvalidArgumentError, match=r'at least one weight'):
        WeightFn([])


def test_of(get_polynomial):
    """Test the `WeightFn.of` method."""
    weights = WeightFn([1, '3/2'])

    assert weights.of(get_polynomial('x1*x2 + x1^2')) == fractions.Fraction(5, 2)
    assert weights.of(get_polynomial('t*x1', parameters=['t'])) == 1

    with pytest.raises(ZeroPolynomialError):
        weights.of(get_polynomial('0'))

    with pytest.raises(InvalidArgumentError, match=r'has 2 weights but the polynomial 3 variables'):
        weights.of(get_polynomial('x3', n=3))


def test_predicates():
    """Test the monotonicity predicates of `WeightFn`."""
    assert WeightFn([1, 1, 2]).is_nondecreasing()
    assert not WeightFn([1, 1, 2]).is_strictly_increasing()
    assert WeightFn([1, 2, 3]).is_strictly_increasing()
    assert not WeightFn([0, 1]).is_positive()


def test_shifted():
    """Test the `WeightFn.shifted` method."""
    assert WeightFn([1, 1]).shifted('1/2', [0, 2]) == (1, 2)


def test_w_leading_part(get_polynomial):
    """Test the `w_leading_part` function."""
    f = get_polynomial('x1*x3 + x2^2 + x1^3', n=3)
    leading = w_leading_part(f, WeightFn([1, 3, 5]))

    assert leading.value == 6
    assert leading.part == get_polynomial('x1*x3 + x2^2', n=3)


def test_next_critical_step(get_polynomial):
    """Test the `next_critical_step` function."""
    f = get_polynomial('x1*x2 + x2^3')

    assert next_critical_step(f, WeightFn([1, 1]), [1, 0]) == 1
    assert next_critical_step(f, WeightFn([1, 1]), [0, 1]) is None
    assert next_critical_step(get_polynomial('x1^3'), WeightFn([2, 1]), [1, 3]) is None


def test_next_critical_step_unstable(get_polynomial):
    """Test the `next_critical_step` function when the leading terms do not share their direction weight."""
    f = get_polynomial('x1^3 + x1^2*x2')
    weights = WeightFn([1, 1])

    with pytest.raises(UnstableLeadingPartError, match=r'loses terms for every positive step'):
        next_critical_step(f, weights, [0, 1])

    assert next_catch_up_step(f, weights, [0, 1]) is None
    assert w_leading_part(f, weights.shifted('1/2', [0, 1])).part == get_polynomial('x1^2*x2')


def test_next_catch_up_step(get_polynomial):
    """Test the `next_catch_up_step` function measures the step from the terms of maximal direction weight."""
    f = get_polynomial('x1^3 + x1^2*x2 + x2^2')

    assert next_catch_up_step(f, WeightFn([1, 1]), [0, 1]) == 1


def _random_polynomial(rng, n):
    context = PolynomialContext.standard(n)
    terms = {tuple(rng.randint(0, 3) for _ in range(n)): rng.choice([-2, -1, 1, 2]) for _ in range(rng.randint(1, 5))}
    return Polynomial.from_terms(context, terms)


def _leading_terms(f, weights):
    return set(w_leading_part(f, weights).part.terms_dict())


def test_next_critical_step_midpoints(rng):
    """Test the leading part is constant before the critical step and gains terms at it, by sampling midpoints."""
    for _ in range(200):
        n = rng.randint(1, 3)
        f = _random_polynomial(rng, n)
        weights = WeightFn([rng.randint(1, 4) for _ in range(n)])
        direction = [rng.randint(0, 2) for _ in range(n)]
        direction[-1] = direction[-1] or 1
        leading = _leading_terms(f, weights)

        try:
            step = next_critical_step(f, weights, direction)
        except UnstableLeadingPartError:
            small = fractions.Fraction(next_catch_up_step(f, weights, direction) or 1) / 2
            assert _leading_terms(f, weights.shifted(small, direction)) != leading
            continue

        if step is None:
            for sample in (1, 10, 100):
                assert _leading_terms(f, weights.shifted(sample, direction)) == leading
            continue

        assert step > 0

        for fraction in (fractions.Fraction(1, 4), fractions.Fraction(1, 2), fractions.Fraction(3, 4)):
            assert _leading_terms(f, weights.shifted(step * fraction, direction)) == leading

        assert _leading_terms(f, weights.shifted(step, direction)) > leading


@pytest.mark.parametrize('direction', ([0, 0], [-1, 1], [1]))
def test_next_critical_step_invalid_direction(get_polynomial, direction):
    """Test the `next_critical_step` function rejects invalid directions."""
    with pytest.raises(InvalidArgumentError, match=r'is not a nonzero non-negative direction'):
        next_critical_step(get_polynomial('x1*x2'), WeightFn([1, 1]), direction)


@pytest.mark.parametrize(('n', 'd', 'expected'), (
    (1, 2, (1,)),
    (2, 3, (1, 3)),
    (3, 3, (1, 3, 5)),
    (4, 2, (1, 2, 4, 5)),
))
def test_wchoice_weights(n, d, expected):
    """Test the `wchoice_weights` function."""
    weights = wchoice_weights(n, d)

    assert weights == expected
    assert weights.is_strictly_increasing()
    assert len({weights[index] + weights[n - 1 - index] for index in range(n)}) == 1


def test_wchoice_weights_invalid():
    """Test the `wchoice_weights` function rejects invalid arguments."""
    with pytest.raises(InvalidArgumentError, match=r'positive integer'):
        wchoice_weights(0, 2)

    with pytest.raises(InvalidArgumentError, match=r'at least 2'):
        wchoice_weights(2, 1)
