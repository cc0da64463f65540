# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.polys.scalars` module."""
import fractions

import pytest

from hesslab.exceptions import UnsupportedFieldError
from hesslab.polys import Field, format_scalar, is_square, parse_scalar, sqrt_scalar


def test_field_from_string():
    """Test the `Field.from_string` method."""
    assert Field.from_string('Q') is Field.Q
    assert Field.from_string('qi') is Field.QI
    assert Field.from_string(Field.QI) is Field.QI

    with pytest.raises(UnsupportedFieldError, match=r'`R` is not a supported scalar field'):
        Field.from_string('R')


def test_field_convert():
    """Test the `Field.convert` method."""
    assert Field.Q.convert(fractions.Fraction(3, 2)) == Field.Q.domain(3, 2)
    assert Field.Q.convert(parse_scalar('5', Field.QI)) == 5

    with pytest.raises(UnsupportedFieldError, match=r'is not a rational number'):
        Field.Q.convert(parse_scalar('1+i', Field.QI))


def test_field_join():
    """Test the `Field.join` method."""
    assert Field.join(Field.Q, Field.Q) is Field.Q
    assert Field.join(Field.Q, Field.QI) is Field.QI


@pytest.mark.parametrize(('text', 'field', 'expected'), (
    ('3/2', Field.Q, '3/2'),
    ('-4', Field.Q, '-4'),
    ('1+i', Field.QI, '1+i'),
    ('2-3*i', Field.QI, '2-3*i'),
    ('-i', Field.QI, '-i'),
    ('1/2*i', Field.QI, '1/2*i'),
))
def test_format_scalar(text, field, expected):
    """Test the `format_scalar` function."""
    assert format_scalar(parse_scalar(text, field)) == expected


def test_format_scalar_parenthesize():
    """Test the `format_scalar` function wraps Gaussian scalars with two parts when asked to."""
    assert format_scalar(parse_scalar('1+i', Field.QI), parenthesize=True) == '(1+i)'
    assert format_scalar(parse_scalar('i', Field.QI), parenthesize=True) == 'i'


def test_sqrt_scalar_rationals():
    """Test the `sqrt_scalar` function over the rationals."""
    assert sqrt_scalar(parse_scalar('9/4'), Field.Q) == parse_scalar('3/2')
    assert sqrt_scalar(2, Field.Q) is None
    assert sqrt_scalar(-1, Field.Q) is None


def test_sqrt_scalar_gaussian():
    """Test the `sqrt_scalar` function over the Gaussian rationals."""
    assert sqrt_scalar(parse_scalar('2*i', Field.QI), Field.QI) == parse_scalar('1+i', Field.QI)
    assert sqrt_scalar(-1, Field.QI) == parse_scalar('i', Field.QI)
    assert sqrt_scalar(parse_scalar('-1/4', Field.QI), Field.QI) == parse_scalar('1/2*i', Field.QI)


def test_is_square_two_over_gaussian_rationals():
    """Test that two is not a square over the Gaussian rationals, although minus one is."""
    assert not is_square(2, Field.QI)
    assert is_square(-1, Field.QI)
    assert not is_square(-1, Field.Q)
