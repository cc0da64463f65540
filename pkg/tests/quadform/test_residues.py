# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.quadform.residues` module."""
import pytest
from sympy.polys.domains import ZZ_I

from hesslab.exceptions import ParsingError
from hesslab.polys import Field
from hesslab.quadform import ResidueRing, candidate_primes, format_integer, parse_integer, valuation


def test_residue_ring_sizes():
    """Test the `ResidueRing.size` property for rational and Gaussian moduli."""
    assert ResidueRing(3, Field.Q).size == 3
    assert ResidueRing(ZZ_I(1, 1), Field.QI).size == 2
    assert ResidueRing(ZZ_I(2, 1), Field.QI).size == 5
    assert ResidueRing(3, Field.QI).size == 9
    assert len(ResidueRing(4, Field.QI).elements()) == 16


def test_residue_ring_reduce():
    """Test the `ResidueRing.reduce` method gives one representative per class."""
    ring = ResidueRing(ZZ_I(1, 1), Field.QI)

    assert ring.reduce(ZZ_I(1, 1)) == ring.zero
    assert ring.reduce(ZZ_I(0, 1)) == ring.reduce(ZZ_I(1, 0))
    assert ResidueRing(5, Field.Q).reduce(-1) == (4, 0)


@pytest.mark.parametrize(
    'modulus', (ZZ_I(1, 1), ZZ_I(2, 1), ZZ_I(1, 2), ZZ_I(3, 0), ZZ_I(0, 3), ZZ_I(3, 2), ZZ_I(4, 0))
)
def test_residue_ring_multiples_of_modulus(modulus):
    """Test the `ResidueRing.reduce` method sends the multiples of the modulus to zero and nothing else."""
    ring = ResidueRing(modulus, Field.QI)

    for real in range(-3, 4):
        for imag in range(-3, 4):
            assert ring.reduce(modulus * ZZ_I(real, imag)) == ring.zero

    assert len({ring.reduce(ZZ_I(real, imag)) for real in range(12) for imag in range(12)}) == ring.size


def test_residue_ring_zero_modulus():
    """Test the constructor of `ResidueRing` refuses a zero modulus."""
    with pytest.raises(ValueError, match=r'must be nonzero'):
        ResidueRing(0, Field.Q)


def test_forced_indices():
    """Test the `ResidueRing.forced_indices` method on a sum of two squares."""
    assert ResidueRing(2, Field.Q).forced_indices([1, 1], 2) == ()
    assert ResidueRing(4, Field.Q).forced_indices([1, 1], 2) == (0, 1)


def test_candidate_primes():
    """Test the `candidate_primes` function."""
    assert candidate_primes(Field.Q) == [2, 3, 5, 7]
    assert candidate_primes(Field.Q, [22]) == [2, 3, 5, 7, 11]
    assert candidate_primes(Field.QI)[:3] == [ZZ_I(1, 1), ZZ_I(2, 1), ZZ_I(2, -1)]


def test_valuation():
    """Test the `valuation` function."""
    assert valuation(12, 2) == 2
    assert valuation(ZZ_I(0, 2), ZZ_I(1, 1)) == 2

    with pytest.raises(ValueError, match=r'valuation of zero'):
        valuation(0, 2)


def test_parse_and_format_integer():
    """Test the `parse_integer` and `format_integer` functions."""
    assert parse_integer('2+i', Field.QI) == ZZ_I(2, 1)
    assert format_integer(ZZ_I(2, -1)) == '2-i'
    assert format_integer(7) == '7'

    with pytest.raises(ParsingError, match=r'is not an integer of the field `Q`'):
        parse_integer('1/2', Field.Q)
