# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.fixtures.registry` module."""
import pytest

from hesslab.exceptions import InvalidArgumentError, UnknownFixtureError
from hesslab.fixtures import (
    FIXTURE_NAMES, counterexample_determinant, fixture_context, fixture_polynomial, get_fixture_metadata,
    get_fixture_metadata_filepath, recorded_coefficients
)
from hesslab.polys import Field


@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_get_fixture_metadata(name):
    """Test the `get_fixture_metadata` function for every packaged fixture."""
    metadata = get_fixture_metadata(name)

    assert get_fixture_metadata_filepath(name).name == f'{name}.json'
    assert metadata['name'] == name
    assert {'field', 'parameters', 'variables', 'polynomial', 'provenance'} <= set(metadata)


def test_unknown_fixture():
    """Test the registry rejects an unknown fixture name."""
    with pytest.raises(UnknownFixtureError, match=r'`hessian` is not a known fixture'):
        get_fixture_metadata('hessian')


def test_fixture_context():
    """Test the `fixture_context` function."""
    assert fixture_context('qi-form').field is Field.QI
    assert fixture_context('gn-counterexample').parameters == ('t',)
    assert fixture_context('gn-counterexample', 6).n == 6
    assert fixture_context('dillen4').n == 4


@pytest.mark.parametrize(('name', 'n'), (('gn-counterexample', 3), ('dillen4', 5), ('qi-form', 3)))
def test_fixture_context_invalid_size(name, n):
    """Test the `fixture_context` function rejects sizes the fixture is not defined for."""
    with pytest.raises(InvalidArgumentError, match=rf'is not defined for {n} variables'):
        fixture_context(name, n)


def test_fixture_polynomial(get_polynomial):
    """Test the `fixture_polynomial` function, including the tail of the counterexample family."""
    base = 'x1*x2 + t*x1*x2^2 + (x2 + x1*x3)^3 + x1^4*(1 + x4)'

    assert fixture_polynomial('gn-counterexample') == get_polynomial(base, n=4, parameters=('t',))
    assert fixture_polynomial('gn-counterexample', 6) == get_polynomial(
        f'{base} + x5^7 + x6^8', n=6, parameters=('t',)
    )
    assert fixture_polynomial('qi-form') == get_polynomial(
        'x1^2 + 3*x2^2 + 5*x3^2 + 10*x4^2', n=4, field=Field.QI
    )


def test_counterexample_determinant(get_polynomial):
    """Test the `counterexample_determinant` function matches the recorded coefficients."""
    assert counterexample_determinant(4) == get_polynomial('-192*t*x1^9*(x2 + x1*x3)', n=4, parameters=('t',))
    assert counterexample_determinant(5) == get_polynomial(
        '-8064*t*x1^9*(x2 + x1*x3)*x5^5', n=5, parameters=('t',)
    )

    with pytest.raises(InvalidArgumentError):
        counterexample_determinant(3)


def test_recorded_coefficients():
    """Test the `recorded_coefficients` function."""
    assert recorded_coefficients('gn-counterexample') == {4: '-192', 5: '-8064'}
    assert recorded_coefficients('qi-form') == {}
