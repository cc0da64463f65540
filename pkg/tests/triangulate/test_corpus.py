# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.triangulate.corpus` module and the pipeline over random conjugated instances."""
import itertools

import pytest

from hesslab.calculus import PolyMatrix, gradient, hessian, hessian_determinant, jacobian
from hesslab.exceptions import InvalidArgumentError
from hesslab.gradmap import invert_antitriangular, normalized_gradient_map, verify_unipotent
from hesslab.quadform import QuadraticForm
from hesslab.triangulate import (
    AntiTriWitness, ClassificationTag, dillen_pipeline, normalize_linear_part, random_antitriangular_seed,
    random_conjugated_instance, random_zero_hessian
)
from hesslab.weights import verify_weight_sum, wchoice_leading_is_antidiagonal, wchoice_weights

SHAPES = tuple(itertools.product((2, 3), (3, 4)))


def assert_sound_witness(f, witness):
    """Assert every property a witness found by the pipeline must have."""
    assert isinstance(witness, AntiTriWitness)
    assert witness.is_valid()

    determinant = witness.transform.determinant()
    assert hessian_determinant(witness.transformed) == hessian_determinant(f) * determinant**2

    form = QuadraticForm.from_polynomial(f)
    assert form.evaluate(witness.transform.matrix.column(f.n - 1)) == 0

    assert wchoice_leading_is_antidiagonal(f, witness.transform)
    assert verify_weight_sum(f, witness.transform, wchoice_weights(f.n, f.degree))


@pytest.mark.parametrize(('n', 'degree'), SHAPES)
def test_random_antitriangular_seed(rng, n, degree):
    """Test the `random_antitriangular_seed` function returns a seed with a constant anti-diagonal Hessian shape."""
    seed = random_antitriangular_seed(n, degree, rng)
    matrix = hessian(seed)

    assert seed.degree == degree
    assert matrix.is_anti_triangular()
    assert all(entry.is_constant() and not entry.is_zero() for entry in matrix.anti_diagonal())
    assert hessian_determinant(seed).is_constant()


@pytest.mark.parametrize(('n', 'degree'), ((0, 3), (2, 1), (1, 3)))
def test_random_antitriangular_seed_invalid(rng, n, degree):
    """Test the `random_antitriangular_seed` function rejects shapes that have no seed."""
    with pytest.raises(InvalidArgumentError, match=r'no anti-triangular seed'):
        random_antitriangular_seed(n, degree, rng)


def test_random_conjugated_instance(rng):
    """Test the `random_conjugated_instance` function returns an instance for which the transform is a witness."""
    f, seed, transform = random_conjugated_instance(3, 3, rng)

    witness = AntiTriWitness.build(f, transform)
    assert witness.is_valid()
    assert witness.transformed == seed


def test_random_zero_hessian_invalid(rng):
    """Test the `random_zero_hessian` function rejects classes that do not occur."""
    with pytest.raises(InvalidArgumentError):
        random_zero_hessian(ClassificationTag.NON_DEGENERATE, 3, 3, rng)

    with pytest.raises(InvalidArgumentError, match=r'does not occur'):
        random_zero_hessian(ClassificationTag.IN_TWO_FORMS, 2, 3, rng)

    with pytest.raises(InvalidArgumentError, match=r'does not occur'):
        random_zero_hessian(ClassificationTag.RANK1_FAMILY, 3, 2, rng)


@pytest.mark.parametrize(('n', 'degree'), SHAPES)
def test_pipeline_on_conjugated_instance(rng, n, degree):
    """Test the `dillen_pipeline` function recovers a witness for a conjugated seed."""
    f, _, _ = random_conjugated_instance(n, degree, rng)
    assert_sound_witness(f, dillen_pipeline(f))


@pytest.mark.slow
@pytest.mark.parametrize(('n', 'degree'), SHAPES)
def test_pipeline_on_corpus(rng, n, degree):
    """Test the `dillen_pipeline` function recovers a witness for every instance of a random corpus."""
    for _ in range(25):
        f, _, _ = random_conjugated_instance(n, degree, rng)
        assert_sound_witness(f, dillen_pipeline(f))


@pytest.mark.slow
@pytest.mark.parametrize(('n', 'degree'), SHAPES)
def test_inversion_on_corpus(rng, n, degree):
    """Test every witness of the random corpus gives a gradient map that inverts exactly and normalizes to a unipotent
    map."""
    for _ in range(25):
        f, _, _ = random_conjugated_instance(n, degree, rng)
        witness = dillen_pipeline(f)

        mapping = gradient(witness.transformed)
        inverse = invert_antitriangular(mapping).inverse
        assert mapping.compose(inverse).is_identity()
        assert inverse.compose(mapping).is_identity()

        lower, scale = normalize_linear_part(f, witness.transform)
        normalized = normalized_gradient_map(f, witness.transform * lower, scale)
        assert verify_unipotent(normalized)

        difference = jacobian(normalized) - PolyMatrix.identity(normalized.context, n)
        assert (difference**n).is_zero()
