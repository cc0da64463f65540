# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.calculus.determinant` module."""
import pytest

from hesslab.calculus import PolyMatrix, cofactor_determinant, hessian, poly_determinant
from hesslab.exceptions import DimensionMismatchError, SizeLimitExceededError


@pytest.fixture
def get_matrix(get_polynomial):
    """Return a factory for `PolyMatrix` instances from nested lists of polynomial texts."""

    def _get_matrix(rows, n=2, parameters=()):
        return PolyMatrix([[get_polynomial(entry, n, parameters) for entry in row] for row in rows])

    return _get_matrix


def test_poly_determinant(get_matrix):
    """Test the `poly_determinant` function."""
    matrix = get_matrix([['x1', 'x2'], ['x2', 'x1']])
    assert str(poly_determinant(matrix)) == 'x1^2 - x2^2'


def test_poly_determinant_zero_pivot(get_matrix):
    """Test the `poly_determinant` function swaps rows when a pivot vanishes."""
    matrix = get_matrix([['0', '1', 'x1'], ['1', '0', 'x2'], ['x1', 'x2', '1']])

    assert poly_determinant(matrix) == cofactor_determinant(matrix)
    assert str(poly_determinant(matrix)) == '2*x1*x2 - 1'


def test_poly_determinant_singular(get_matrix):
    """Test the `poly_determinant` function on a matrix with a zero column."""
    assert poly_determinant(get_matrix([['0', 'x1'], ['0', 'x2']])).is_zero()


def test_agrees_with_cofactor_expansion(get_polynomial):
    """Test that elimination and cofactor expansion agree on Hessians of a few polynomials."""
    for text in ('x1^3*x2 + x2^2*x3 + x3^4 + x1*x4^2', '(x1 + x2^2)*x3 + (x2 + (x1 + x2^2)^2)*x4'):
        matrix = hessian(get_polynomial(text, n=4))
        assert poly_determinant(matrix) == cofactor_determinant(matrix)


def test_size_limit(get_polynomial):
    """Test the determinant functions refuse matrices over the size limit."""
    matrix = hessian(get_polynomial('x1*x2*x3', n=3))

    with pytest.raises(SizeLimitExceededError, match=r'larger than the determinant size limit of 2'):
        poly_determinant(matrix, size_limit=2)

    assert poly_determinant(matrix, size_limit=None) == cofactor_determinant(matrix)


def test_non_square(get_matrix):
    """Test the determinant functions refuse non-square matrices."""
    with pytest.raises(DimensionMismatchError, match=r'non-square'):
        poly_determinant(get_matrix([['x1', 'x2']]))
