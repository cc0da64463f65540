# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.triangulate.pipeline` module."""
import pytest

from hesslab.exceptions import NonConstantDeterminantError, UnsupportedDimensionError
from hesslab.linalg import ScalarMatrix
from hesslab.polys import Field
from hesslab.quadform import QuadraticForm
from hesslab.triangulate import AntiTriWitness, IsotropyObstruction, dillen_pipeline


def test_weight_route(get_polynomial):
    """Test the `dillen_pipeline` function for a polynomial of degree three."""
    witness = dillen_pipeline(get_polynomial('x1*x2 + x2^3'))

    assert isinstance(witness, AntiTriWitness)
    assert witness.case_tag == 'weight'
    assert witness.is_valid()
    assert witness.transform.matrix == ScalarMatrix([[0, 1], [1, 0]])
    assert witness.weights.to_strings() == ['1', '2']
    assert witness.constants == (1, 1)


def test_weight_route_three_variables(get_polynomial):
    """Test the `dillen_pipeline` function for a polynomial in three variables."""
    witness = dillen_pipeline(get_polynomial('x1*x3 + x2^2 + x3^3', n=3))

    assert witness.case_tag == 'weight'
    assert witness.is_valid()
    assert witness.hessian().constant_part().determinant() == -2


@pytest.mark.parametrize(('text', 'n'), (('x1^2', 1), ('x1^2 + x1', 1), ('x1 + x2', 2), ('3', 3)))
def test_trivial_route(get_polynomial, text, n):
    """Test the `dillen_pipeline` function for a single variable or a degree below two."""
    witness = dillen_pipeline(get_polynomial(text, n=n))

    assert witness.case_tag == 'trivial'
    assert witness.is_valid()


def test_zero_hessian_route(get_polynomial):
    """Test the `dillen_pipeline` function for a zero Hessian determinant, including terms of degree one."""
    witness = dillen_pipeline(get_polynomial('(x1 + x2)^3 + x1'))

    assert witness.case_tag == 'zero_hessian'
    assert witness.is_valid()
    assert witness.constants is None


@pytest.mark.parametrize(('text', 'n'), (('x1^2 - x2^2', 2), ('x1*x2 + x1^2', 2), ('x1^2 + x2^2 - x3^2 + x1', 3)))
def test_quadratic_route(get_polynomial, text, n):
    """Test the `dillen_pipeline` function for isotropic quadratic polynomials."""
    witness = dillen_pipeline(get_polynomial(text, n=n))

    assert witness.case_tag == 'quadratic'
    assert witness.is_valid()

    form = QuadraticForm.from_polynomial(witness.polynomial)
    assert form.evaluate(witness.transform.matrix.column(witness.polynomial.n - 1)) == 0


def test_quadratic_obstruction(get_polynomial):
    """Test the `dillen_pipeline` function proves that an anisotropic quadratic part has no witness."""
    result = dillen_pipeline(get_polynomial('1/2*x1^2 + 1/2*x2^2'))

    assert isinstance(result, IsotropyObstruction)
    assert result.isotropy.is_anisotropic
    assert result.to_record()['case_tag'] == 'isotropy_obstruction'


def test_quadratic_gaussian(get_polynomial):
    """Test the `dillen_pipeline` function finds a witness for a sum of squares over the Gaussian rationals."""
    witness = dillen_pipeline(get_polynomial('1/2*x1^2 + 1/2*x2^2', field=Field.QI))

    assert isinstance(witness, AntiTriWitness)
    assert witness.case_tag == 'quadratic'
    assert witness.is_valid()


def test_errors(get_polynomial):
    """Test the `dillen_pipeline` function rejects unsupported inputs."""
    with pytest.raises(UnsupportedDimensionError, match=r'supports 1 to 3 variables'):
        dillen_pipeline(get_polynomial('x1*x4 + x2*x3', n=4))

    with pytest.raises(NonConstantDeterminantError):
        dillen_pipeline(get_polynomial('x1^3 + x2^2'))
