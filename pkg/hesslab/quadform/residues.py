# -*- coding: utf-8 -*-
"""Integers of the scalar fields and their finite quotient rings.

The integers of the rationals are ``ZZ`` and those of the Gaussian rationals are ``ZZ_I``, both taken from ``sympy``.
A quotient ``ZZ_I / (mu)`` is represented through the Hermite normal form of the lattice ``mu * ZZ_I`` in ``ZZ^2``:
with ``mu = a + b*i``, ``g = gcd(a, b)`` and ``N = a^2 + b^2`` the lattice has the basis ``(N / g, 0), (s, g)``, so
every class has exactly one representative ``x + y*i`` with ``0 <= x < N / g`` and ``0 <= y < g``.
"""
import functools
import itertools
import math
import typing

from sympy import primefactors
from sympy.polys.domains import QQ_I, ZZ, ZZ_I

from hesslab.exceptions import ParsingError
from hesslab.polys import Field, format_scalar, gaussian_parts, parse_scalar

__all__ = (
    'integer_ring', 'integer_parts', 'norm', 'divides', 'valuation', 'format_integer', 'parse_integer',
    'candidate_primes', 'ResidueRing', 'MAX_RESIDUE_RING_SIZE'
)

MAX_RESIDUE_RING_SIZE = 64

SMALL_RATIONAL_PRIMES = {Field.Q: (2, 3, 5, 7), Field.QI: (2, 3, 5, 13, 17)}

Residue = typing.Tuple[int, int]


def integer_ring(field: Field):
    """Return the ``sympy`` ring of integers of the field."""
    return ZZ if Field.from_string(field) is Field.Q else ZZ_I


def integer_parts(value) -> typing.Tuple[int, int]:
    """Return the real and imaginary part of an integer of either ring as Python integers."""
    if ZZ_I.of_type(value):
        return int(value.x), int(value.y)
    return int(value), 0


def norm(value) -> int:
    real, imag = integer_parts(value)
    return real * real + imag * imag


def divides(divisor, value) -> bool:
    return not value % divisor


def valuation(value, prime) -> int:
    """Return the exponent of the highest power of ``prime`` dividing the nonzero ``value``."""
    if not value:
        raise ValueError('the valuation of zero is not defined.')
    count = 0
    while divides(prime, value):
        value = value // prime
        count += 1
    return count


def format_integer(value) -> str:
    real, imag = integer_parts(value)
    return format_scalar(QQ_I(real, imag))


def parse_integer(text: str, field: Field):
    """Parse the text of an integer of the ring of integers of the field.

    :raises `~hesslab.exceptions.ParsingError`: if the text is not an integral scalar.
    """
    field = Field.from_string(field)
    real, imag = gaussian_parts(parse_scalar(text, field))

    if real.denominator != 1 or imag.denominator != 1:
        raise ParsingError(f'`{text}` is not an integer of the field `{field.value}`')

    if field is Field.Q:
        return ZZ(int(real))

    return ZZ_I(int(real), int(imag))


@functools.lru_cache(maxsize=None)
def _gaussian_primes_over(prime: int) -> typing.Tuple:
    """Return the Gaussian primes dividing the rational prime, up to units."""
    if prime == 2:
        return (ZZ_I(1, 1),)

    if prime % 4 == 3:
        return (ZZ_I(prime, 0),)

    for real in range(1, math.isqrt(prime) + 1):
        imag = math.isqrt(prime - real * real)
        if real * real + imag * imag == prime and real > imag:
            return ZZ_I(real, imag), ZZ_I(real, -imag)

    raise ValueError(f'`{prime}` is not a sum of two squares.')


def candidate_primes(field: Field, coefficients: typing.Iterable = ()) -> typing.List:
    """Return the primes to try for descent arguments, ordered by norm.

    These are the primes over a fixed list of small rational primes together with those dividing the norm of one of the
    given coefficients.
    """
    field = Field.from_string(field)
    rational = set(SMALL_RATIONAL_PRIMES[field])

    for coefficient in coefficients:
        if coefficient:
            rational.update(primefactors(norm(coefficient)))

    if field is Field.Q:
        return [ZZ(prime) for prime in sorted(rational)]

    primes = [gaussian for prime in sorted(rational) for gaussian in _gaussian_primes_over(prime)]

    return sorted(primes, key=lambda prime: (norm(prime), [-part for part in integer_parts(prime)]))


class ResidueRing:
    """The quotient of the integers of a field by a nonzero ideal ``(mu)``."""

    def __init__(self, modulus, field: Field):
        """Construct a new instance.

        :param modulus: a nonzero element of the ring of integers of ``field``.
        :param field: the scalar field.
        """
        self.field = Field.from_string(field)
        self.modulus = integer_ring(self.field).convert(modulus)

        if not self.modulus:
            raise ValueError('the modulus of a residue ring must be nonzero.')

        real, imag = integer_parts(self.modulus)

        if self.field is Field.Q:
            self._width, self._height, self._shift = abs(real), 1, 0
        else:
            size = real * real + imag * imag
            # Solve ``imag * u + real * v = height`` for the lattice vector ``mu * (u + v*i)`` of second coordinate
            # ``height``; its first coordinate is the shift of the second basis vector.
            first, second, height = (int(value) for value in ZZ.gcdex(ZZ(imag), ZZ(real)))
            shift = real * first - imag * second
            self._width, self._height = size // height, height
            self._shift = shift % self._width

    @property
    def size(self) -> int:
        return self._width * self._height

    def reduce(self, value) -> Residue:
        """Return the canonical representative of the class of an integer of the ring, as a pair of Python ints."""
        real, imag = integer_parts(value) if not isinstance(value, tuple) else value
        quotient = imag // self._height
        real -= quotient * self._shift
        imag -= quotient * self._height
        return real % self._width, imag

    @property
    def zero(self) -> Residue:
        return 0, 0

    def elements(self) -> typing.List[Residue]:
        return [(real, imag) for imag in range(self._height) for real in range(self._width)]

    def add(self, first: Residue, second: Residue) -> Residue:
        return self.reduce((first[0] + second[0], first[1] + second[1]))

    def mul(self, first: Residue, second: Residue) -> Residue:
        real = first[0] * second[0] - first[1] * second[1]
        imag = first[0] * second[1] + first[1] * second[0]
        return self.reduce((real, imag))

    def lift(self, residue: Residue):
        return integer_ring(self.field).convert(residue[0]) if self.field is Field.Q else ZZ_I(*residue)

    def square_table(self, coefficient, prime) -> typing.Tuple[typing.FrozenSet[Residue], typing.FrozenSet[Residue]]:
        """Return the classes of ``coefficient * r^2`` over all ``r`` and over the ``r`` not divisible by ``prime``."""
        factor = self.reduce(coefficient)
        reducer = ResidueRing(prime, self.field)
        values, units = set(), set()

        for residue in self.elements():
            value = self.mul(factor, self.mul(residue, residue))
            values.add(value)
            if reducer.reduce(residue) != reducer.zero:
                units.add(value)

        return frozenset(values), frozenset(units)

    def sumset(self, sets: typing.Iterable[typing.FrozenSet[Residue]]) -> typing.Set[Residue]:
        """Return all classes that are sums with one summand taken from each of the given sets."""
        reachable = {self.zero}
        for values in sets:
            reachable = {self.add(first, second) for first, second in itertools.product(reachable, values)}
        return reachable

    def forced_indices(self, coefficients: typing.Sequence, prime) -> typing.Tuple[int, ...]:
        """Return the indices ``j`` such that every zero of ``sum(a_i * c_i^2)`` modulo the modulus has ``c_j``
        divisible by ``prime``.
        """
        tables = [self.square_table(coefficient, prime) for coefficient in coefficients]
        forced = []

        for index, (_, units) in enumerate(tables):
            others = self.sumset(values for position, (values, _) in enumerate(tables) if position != index)
            negated = {self.reduce((-real, -imag)) for real, imag in others}
            if not units & negated:
                forced.append(index)

        return tuple(forced)

    def __repr__(self):
        return f'ResidueRing({format_integer(self.modulus)}, {self.field.value})'
