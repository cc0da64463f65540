# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.gradmap.inversion` module."""
import pytest

from hesslab.calculus import PolyMap, gradient
from hesslab.exceptions import (
    DegreeLimitExceededError, DimensionMismatchError, NonConstantAntiDiagonalError, NotAntiTriangularError
)
from hesslab.gradmap import invert_antitriangular


def test_invert_antitriangular(get_map):
    """Test the `invert_antitriangular` function for a Jacobian that is zero below the anti-diagonal."""
    mapping = get_map('x2 + 3*x1^2', 'x1')
    witness = invert_antitriangular(mapping)

    assert witness.inverse == get_map('x2', 'x1 - 3*x2^2')
    assert witness.constants == (1, 1)
    assert witness.to_record() == {'G': ['x2', '-3*x2^2 + x1'], 'constants': ['1', '1']}


def test_double_inversion(get_map):
    """Test the `invert_antitriangular` function inverts its own output, whose Jacobian is zero above the
    anti-diagonal."""
    mapping = get_map('x3 + x1*x2 + x1^3', '2*x2 + x1^2', 'x1')
    inverse = invert_antitriangular(mapping).inverse

    assert mapping.compose(inverse).is_identity()
    assert invert_antitriangular(inverse).inverse == mapping


def test_invert_gradient(get_polynomial):
    """Test the `invert_antitriangular` function on the gradient of a polynomial with an anti-triangular Hessian."""
    mapping = gradient(get_polynomial('x1*x3 + x2^2 + x1^2*x2 + x1^4', n=3))
    inverse = invert_antitriangular(mapping).inverse

    assert inverse.compose(mapping).is_identity()


@pytest.mark.parametrize(('texts', 'exception', 'match'), (
    (('x1', 'x2'), NotAntiTriangularError, r'neither below nor above'),
    (('x1*x2', 'x1'), NonConstantAntiDiagonalError, r'not a nonzero constant'),
    (('x1^2', 'x1'), NonConstantAntiDiagonalError, r'not a nonzero constant'),
))
def test_invert_antitriangular_invalid(get_map, texts, exception, match):
    """Test the `invert_antitriangular` function rejects maps it cannot invert."""
    with pytest.raises(exception, match=match):
        invert_antitriangular(get_map(*texts))


def test_degree_limit(get_map):
    """Test the `invert_antitriangular` function enforces the degree limit."""
    with pytest.raises(DegreeLimitExceededError, match=r'above the limit 2'):
        invert_antitriangular(get_map('x2 + x1^3', 'x1'), degree_limit=2)


def test_dimension(get_polynomial, get_context):
    """Test the `invert_antitriangular` function rejects maps without one component per variable."""
    with pytest.raises(DimensionMismatchError):
        invert_antitriangular(PolyMap([get_polynomial('x1')], get_context(2)))
