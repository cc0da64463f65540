# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.linalg.factorization` module."""
import pytest

from hesslab.exceptions import (
    MiddleEntryNotSquareError, NotAntiTriangularError, NotSymmetricError, SquareRootUnavailableError
)
from hesslab.linalg import (
    ScalarMatrix, anti_lower_factorize, complete_basis, diagonalize_symmetric, find_isotropic_vector, isotropic_flag,
    right_flag_complement
)
from hesslab.polys import Field, parse_scalar


def test_anti_lower_factorize():
    """Test the `anti_lower_factorize` function on a matrix with a middle entry."""
    half = parse_scalar('1/2')
    matrix = ScalarMatrix([[1, 0, half], [0, 1, 0], [half, 0, 0]])
    factor = anti_lower_factorize(matrix)

    assert factor == ScalarMatrix([[1, 0, 0], [0, 1, 0], [half, 0, half]])
    assert factor.transpose() * ScalarMatrix.flipped_identity(3) * factor == matrix


def test_anti_lower_factorize_even():
    """Test the `anti_lower_factorize` function on a matrix without a middle entry."""
    matrix = ScalarMatrix([[4, 3], [3, 0]])
    factor = anti_lower_factorize(matrix)

    assert factor.is_lower_triangular()
    assert factor.transpose() * ScalarMatrix.flipped_identity(2) * factor == matrix


def test_anti_lower_factorize_errors():
    """Test the `anti_lower_factorize` function raises on invalid matrices."""
    with pytest.raises(NotSymmetricError):
        anti_lower_factorize(ScalarMatrix([[1, 2], [0, 0]]))

    with pytest.raises(NotAntiTriangularError):
        anti_lower_factorize(ScalarMatrix([[0, 1], [1, 1]]))

    with pytest.raises(MiddleEntryNotSquareError, match=r'is not a square in the field `Q`'):
        anti_lower_factorize(ScalarMatrix([[0, 0, 1], [0, 2, 0], [1, 0, 0]]))


def test_anti_lower_factorize_gaussian():
    """Test that a middle entry of minus one is a square over the Gaussian rationals."""
    matrix = ScalarMatrix([[0, 0, 1], [0, -1, 0], [1, 0, 0]], Field.QI)
    factor = anti_lower_factorize(matrix)

    assert factor[1, 1] == parse_scalar('i', Field.QI)


def test_diagonalize_symmetric():
    """Test the `diagonalize_symmetric` function, including a matrix with a zero diagonal."""
    matrix = ScalarMatrix([[0, 1], [1, 0]])
    transform = diagonalize_symmetric(matrix)

    assert (transform.matrix.transpose() * matrix * transform.matrix).is_diagonal()

    with pytest.raises(SquareRootUnavailableError):
        diagonalize_symmetric(ScalarMatrix([[2, 0], [0, 1]]), unit=True)


def test_right_flag_complement():
    """Test the `right_flag_complement` function."""
    matrix = ScalarMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    result = right_flag_complement(matrix)

    assert result.determinant()
    assert (matrix * result).is_anti_triangular()


def test_find_isotropic_vector():
    """Test the `find_isotropic_vector` function."""
    assert find_isotropic_vector(ScalarMatrix([[1, 0], [0, 0]])) == (0, 1)
    assert find_isotropic_vector(ScalarMatrix([[1, 0], [0, 1]])) is None

    vector = find_isotropic_vector(ScalarMatrix([[1, 0], [0, -4]]))
    assert ScalarMatrix([[1, 0], [0, -4]]).bilinear(vector, vector) == 0


def test_find_isotropic_vector_finder():
    """Test the `find_isotropic_vector` function falls back on the finder."""
    matrix = ScalarMatrix.diagonal([1, 1, -2])
    assert find_isotropic_vector(matrix, lambda _: (1, 1, 1)) == (1, 1, 1)


def test_isotropic_flag():
    """Test the `isotropic_flag` function."""
    matrix = ScalarMatrix([[1, 1, 0], [1, 0, 2], [0, 2, -1]])
    result = isotropic_flag(matrix)

    assert result.determinant()
    assert (result.transpose() * matrix * result).is_anti_triangular()

    with pytest.raises(SquareRootUnavailableError):
        isotropic_flag(ScalarMatrix.identity(2))


@pytest.mark.parametrize('diagonal', ([1, 1, 0], [0, 1, 1], [1, 2, 0, 0], [1, 3, 0, 7, 0]))
def test_isotropic_flag_degenerate(diagonal):
    """Test the `isotropic_flag` function on degenerate matrices whose anisotropic part needs no isotropic vector."""
    matrix = ScalarMatrix.diagonal(diagonal, Field.Q)
    result = isotropic_flag(matrix)

    assert result.determinant()
    assert (result.transpose() * matrix * result).is_anti_triangular()


def test_isotropic_flag_degenerate_anisotropic():
    """Test the `isotropic_flag` function raises when the block beside a kernel vector needs an isotropic vector."""
    with pytest.raises(SquareRootUnavailableError):
        isotropic_flag(ScalarMatrix.diagonal([1, 1, 1, 0], Field.Q))


def test_complete_basis():
    """Test the `complete_basis` function."""
    field = Field.Q
    completion = complete_basis([(1, 1, 0)], 3, field)

    assert completion == [(1, 0, 0), (0, 0, 1)]


def _random_anti_triangular(rng, size):
    """Return a random symmetric matrix that is zero below its anti-diagonal with a nonzero anti-diagonal."""
    rows = [[0] * size for _ in range(size)]

    for row in range(size):
        for col in range(row, size - row):
            value = rng.randint(-4, 4)
            if row + col == size - 1:
                value = rng.choice([-3, -2, -1, 1, 2, 3])
            rows[row][col] = rows[col][row] = value

    if size % 2:
        middle = size // 2
        rows[middle][middle] = rng.randint(1, 4)**2

    return ScalarMatrix(rows)


def _random_triangular(rng, size, lower):
    rows = [[0] * size for _ in range(size)]
    for row in range(size):
        for col in range(size):
            if (col <= row) if lower else (col >= row):
                rows[row][col] = rng.randint(-3, 3)
    return ScalarMatrix(rows)


def test_anti_lower_factorize_random(rng):
    """Test the `anti_lower_factorize` function reproduces random matrices exactly."""
    for index in range(200):
        size = 1 + index % 6
        matrix = _random_anti_triangular(rng, size)
        factor = anti_lower_factorize(matrix)

        assert factor.is_lower_triangular()
        assert factor.transpose() * ScalarMatrix.flipped_identity(size) * factor == matrix


def test_triangular_products_keep_anti_triangular(rng):
    """Test that multiplying by an upper triangular matrix on the left and a lower triangular one on the right keeps a
    matrix zero below its anti-diagonal."""
    for index in range(50):
        size = 1 + index % 6
        matrix = _random_anti_triangular(rng, size)
        upper = _random_triangular(rng, size, lower=False)
        lower = _random_triangular(rng, size, lower=True)

        assert (upper * matrix * lower).is_anti_triangular()
