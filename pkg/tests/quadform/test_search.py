# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.quadform.search` module."""
import functools
import itertools
import math
import time

import pytest
from sympy.polys.domains import ZZ_I

from hesslab.linalg import ScalarMatrix
from hesslab.polys import Field
from hesslab.quadform import SPLIT_SEARCH_DIMENSION, IsotropyOutcome, QuadraticForm, find_witness, isotropy_search


def test_isotropy_search_degenerate():
    """Test the `isotropy_search` function returns a kernel vector of a degenerate form."""
    result = isotropy_search(QuadraticForm.diagonal([1, 0]))

    assert result.is_isotropic
    assert result.vector == (0, 1)
    assert result.height == 0


def test_isotropy_search_witness():
    """Test the `isotropy_search` function finds the first witness by height."""
    result = isotropy_search(QuadraticForm.diagonal([1, -1]), height=3)

    assert result.outcome is IsotropyOutcome.WITNESS
    assert result.vector == (1, -1)
    assert result.to_record() == {'outcome': 'witness', 'height': 1, 'vector': ['1', '-1']}


def test_isotropy_search_gaussian():
    """Test the `isotropy_search` function over the Gaussian rationals, where a sum of two squares is isotropic."""
    form = QuadraticForm.diagonal([1, 1], Field.QI)
    result = isotropy_search(form, height=2)

    assert result.is_isotropic
    assert form.evaluate(result.vector) == 0


def test_isotropy_search_certificate():
    """Test the `isotropy_search` function proves a definite form anisotropic."""
    result = isotropy_search(QuadraticForm.diagonal([1, 1]))

    assert result.is_anisotropic
    assert result.vector is None
    assert result.to_record()['outcome'] == 'anisotropic_certificate'


def test_find_witness_height():
    """Test the `find_witness` function reports the completed height."""
    form = QuadraticForm.diagonal([1, -4])

    assert find_witness(form, 1) == (None, 1)
    assert find_witness(form, 2) == ((2, -1), 1)


def test_find_witness_candidate_limit():
    """Test the `find_witness` function stops at the candidate limit."""
    assert find_witness(QuadraticForm.diagonal([1, 1, 1]), 5, candidate_limit=3) == (None, 0)


def test_isotropy_search_invalid_height():
    """Test the `isotropy_search` function refuses a height below one."""
    with pytest.raises(ValueError, match=r'at least one'):
        isotropy_search(QuadraticForm.diagonal([1, 1]), height=0)


def _integers(field, height):
    """Return the integers of the field of height at most ``height``, ordered by height then lexicographically."""
    if field is Field.Q:
        return sorted(range(-height, height + 1), key=lambda value: (abs(value), value))
    pairs = itertools.product(range(-height, height + 1), repeat=2)
    return [ZZ_I(*pair) for pair in sorted(pairs, key=lambda pair: (max(map(abs, pair)), pair))]


def _brute_force_witness(form, height):
    """Return the first normalized primitive isotropic vector by height then lexicographic order, or ``None``."""
    field = form.field
    integers = _integers(field, height)
    rank = {(value.x, value.y) if field is Field.QI else value: index for index, value in enumerate(integers)}
    best = None

    for vector in itertools.product(integers, repeat=form.n):
        if not any(vector) or form.evaluate([field.convert(value) for value in vector]):
            continue
        first = next(value for value in vector if value)
        if field is Field.Q:
            normalized = first > 0 and functools.reduce(math.gcd, vector) == 1
            size = max(abs(value) for value in vector)
        else:
            divisor = functools.reduce(ZZ_I.gcd, vector, ZZ_I.zero)
            normalized = first.x > 0 and first.y >= 0 and divisor.x**2 + divisor.y**2 == 1
            size = max(max(abs(value.x), abs(value.y)) for value in vector)
        if not normalized:
            continue
        key = (size, [rank[(value.x, value.y) if field is Field.QI else value] for value in vector])
        if best is None or key < best[0]:
            best = (key, vector)

    return None if best is None else (tuple(field.convert(value) for value in best[1]), best[0][0])


@pytest.mark.parametrize(('coefficients', 'field'), (
    ([1, -2, 3], Field.Q),
    ([2, 3, -7], Field.Q),
    ([1, 1, -3], Field.Q),
    ([1, 2], Field.QI),
    ([1, 3], Field.QI),
))
def test_find_witness_matches_brute_force(coefficients, field):
    """Test the `find_witness` function returns the first witness of a brute force search over the whole cube."""
    form = QuadraticForm.diagonal(coefficients, field)
    height = 3 if field is Field.Q else 2
    expected = _brute_force_witness(form, height)
    vector, completed = find_witness(form, height)

    if expected is None:
        assert (vector, completed) == (None, height)
    else:
        assert (vector, completed + 1) == expected


def test_find_witness_counts_generated_vectors():
    """Test the `find_witness` function counts every generated vector of a height against the candidate limit."""
    form = QuadraticForm.diagonal([1, 1, 1])
    first, second = (3**3 - 1) // 2, (5**3 - 3**3) // 2

    assert find_witness(form, 2, candidate_limit=first - 1) == (None, 0)
    assert find_witness(form, 2, candidate_limit=first) == (None, 1)
    assert find_witness(form, 2, candidate_limit=first + second - 1) == (None, 1)
    assert find_witness(form, 2, candidate_limit=first + second) == (None, 2)


@pytest.mark.parametrize('field', (Field.Q, Field.QI))
def test_find_witness_split_matches_brute_force(rng, field):
    """Test the split search of diagonal forms in four variables returns the first witness of a brute force search."""
    height = 2 if field is Field.Q else 1

    for _ in range(12):
        coefficients = [rng.choice([-5, -3, -2, -1, 1, 2, 3, 5]) for _ in range(SPLIT_SEARCH_DIMENSION)]
        form = QuadraticForm.diagonal(coefficients, field)
        expected = _brute_force_witness(form, height)
        vector, completed = find_witness(form, height)

        if expected is None:
            assert (vector, completed) == (None, height)
        else:
            assert (vector, completed + 1) == expected


def test_find_witness_split_candidate_limit():
    """Test the split search lowers the height until both halves fit within the candidate limit."""
    form = QuadraticForm.diagonal([1, 3, 5, 10], Field.QI)

    assert find_witness(form, 20, candidate_limit=1000) == (None, 1)
    assert find_witness(form, 20, candidate_limit=100) == (None, 0)


@pytest.mark.slow
def test_find_witness_anisotropic_gaussian_form():
    """Test the search up to height twenty finds no isotropic vector of an anisotropic form in four variables."""
    form = QuadraticForm.diagonal([1, 3, 5, 10], Field.QI)

    start = time.perf_counter()
    assert find_witness(form, 20, candidate_limit=None) == (None, 20)
    assert time.perf_counter() - start < 10


def _random_symmetric(rng, size):
    rows = [[0] * size for _ in range(size)]
    for row in range(size):
        for col in range(row, size):
            rows[row][col] = rows[col][row] = rng.randint(-3, 3)
    return rows


@pytest.mark.slow
def test_isotropy_search_unknown_has_no_witness(rng):
    """Test an unknown outcome never hides a witness a brute force search finds up to the searched height."""
    height = 10
    checked = 0

    while checked < 15:
        form = QuadraticForm(ScalarMatrix(_random_symmetric(rng, 3), Field.Q, 3))
        if form.is_degenerate():
            continue

        checked += 1
        result = isotropy_search(form, height)
        expected = _brute_force_witness(form, height)

        if result.outcome is IsotropyOutcome.WITNESS:
            assert (result.vector, result.height) == expected
        else:
            assert expected is None
