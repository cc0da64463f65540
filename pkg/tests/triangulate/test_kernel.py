# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.triangulate.kernel` module."""
import pytest

from hesslab.exceptions import EmptyKernelError, PreconditionUnmetError
from hesslab.polys import substitute_linear
from hesslab.triangulate import directional_kernel, is_degenerate, make_degenerate_transform


def test_directional_kernel(get_polynomial):
    """Test the `directional_kernel` function."""
    assert directional_kernel(get_polynomial('x1*x2', n=3)) == [(0, 0, 1)]
    assert directional_kernel(get_polynomial('(x1 + x2)^3')) == [(-1, 1)]
    assert directional_kernel(get_polynomial('x1*x2 + x1^3')) == []


def test_directional_kernel_indices(get_polynomial):
    """Test the `directional_kernel` function restricted to a subset of the variables."""
    h = get_polynomial('x1*x2 + x3^2', n=3)

    assert directional_kernel(h, indices=[0, 1]) == []
    assert directional_kernel(get_polynomial('x1^2 + x3^2', n=3), indices=[1, 2]) == [(0, 1, 0)]


def test_is_degenerate(get_polynomial):
    """Test the `is_degenerate` function."""
    assert is_degenerate(get_polynomial('(x1 - 2*x2)^2 + (x1 - 2*x2)^5'))
    assert not is_degenerate(get_polynomial('x1^2 + x2^2'))


def test_make_degenerate_transform(get_polynomial):
    """Test the `make_degenerate_transform` function splits the kernel off into the last variable."""
    h = get_polynomial('(x1 + x2)^3')
    transform = make_degenerate_transform(h, directional_kernel(h))

    assert substitute_linear(h, transform) == get_polynomial('x1^3')


def test_make_degenerate_transform_errors(get_polynomial):
    """Test the `make_degenerate_transform` function raises for an empty or invalid basis."""
    h = get_polynomial('x1*x2')

    with pytest.raises(EmptyKernelError):
        make_degenerate_transform(h, [])

    with pytest.raises(PreconditionUnmetError, match=r'do not lie in the directional kernel'):
        make_degenerate_transform(h, [(1, 0)])
