# -*- coding: utf-8 -*-
"""Scalars of the two supported coefficient fields: the rationals and the Gaussian rationals.

Scalars are plain elements of the ``sympy`` domains ``QQ`` and ``QQ_I``; this module only adds what the rest of the
package needs on top of them: field selection, canonical printing, exact square roots and a total order used for
deterministic tie-breaking.
"""
import enum
import fractions
import math
import typing

from sympy.polys.domains import QQ, QQ_I

from hesslab.exceptions import UnsupportedFieldError

__all__ = ('Field', 'format_scalar', 'is_square', 'sqrt_scalar', 'scalar_sort_key', 'to_fraction', 'gaussian_parts')


class Field(enum.Enum):
    """The scalar fields a polynomial can be defined over."""

    Q = 'Q'
    QI = 'Qi'

    @classmethod
    def from_string(cls, value: str) -> 'Field':
        """Return the field corresponding to the given label.

        :param value: either ``Q`` or ``Qi``, case insensitive.
        :return: the field.
        :raises `~hesslab.exceptions.UnsupportedFieldError`: if the label is not recognized.
        """
        if isinstance(value, Field):
            return value

        for field in cls:
            if str(value).lower() == field.value.lower():
                return field

        raise UnsupportedFieldError(f'`{value}` is not a supported scalar field, choose from `Q` or `Qi`.')

    @property
    def domain(self):
        """Return the ``sympy`` domain of this field."""
        return QQ if self is Field.Q else QQ_I

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def convert(self, value):
        """Convert a number to an element of this field.

        :param value: an integer, a ``fractions.Fraction``, a ``QQ`` element or, for the Gaussian rationals, a
            ``QQ_I`` element.
        :return: the corresponding element of the domain of this field.
        :raises `~hesslab.exceptions.UnsupportedFieldError`: if a Gaussian scalar is converted to the rationals.
        """
        domain = self.domain

        if isinstance(value, fractions.Fraction):
            value = QQ(value.numerator, value.denominator)

        if self is Field.Q and QQ_I.of_type(value):
            if value.y:
                raise UnsupportedFieldError(f'the Gaussian scalar `{value}` is not a rational number.')
            return value.x

        return domain.convert(value)

    def contains(self, value) -> bool:
        """Return whether the given scalar lies in this field."""
        if self is Field.QI:
            return True
        return not (QQ_I.of_type(value) and value.y)

    @classmethod
    def join(cls, *fields: 'Field') -> 'Field':
        """Return the smallest field containing all given fields."""
        return Field.QI if Field.QI in fields else Field.Q


def to_fraction(value) -> fractions.Fraction:
    """Return a rational scalar as a ``fractions.Fraction``.

    :raises ValueError: if the scalar has a nonzero imaginary part.
    """
    if QQ_I.of_type(value):
        if value.y:
            raise ValueError(f'the scalar `{value}` is not rational.')
        value = value.x

    return fractions.Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


def gaussian_parts(value) -> typing.Tuple[fractions.Fraction, fractions.Fraction]:
    """Return the real and imaginary parts of a scalar of either field."""
    if QQ_I.of_type(value):
        return to_fraction(value.x), to_fraction(value.y)
    return to_fraction(value), fractions.Fraction(0)


def scalar_sort_key(value) -> typing.Tuple[fractions.Fraction, fractions.Fraction]:
    """Return a key that orders scalars by real part first and imaginary part second."""
    return gaussian_parts(value)


def _format_fraction(value: fractions.Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f'{value.numerator}/{value.denominator}'


def format_scalar(value, parenthesize: bool = False) -> str:
    """Return the canonical text of a scalar.

    Rationals print as ``p`` or ``p/q``; Gaussian rationals as ``a+b*i``, ``b*i`` or ``i``.

    :param value: a scalar of either field.
    :param parenthesize: wrap Gaussian scalars with both a real and an imaginary part in parentheses, as needed when
        the scalar is a factor of a product.
    :return: the canonical text.
    """
    real, imag = gaussian_parts(value)

    if not imag:
        return _format_fraction(real)

    if imag == 1:
        imag_text = 'i'
    elif imag == -1:
        imag_text = '-i'
    else:
        imag_text = f'{_format_fraction(imag)}*i'

    if not real:
        return imag_text

    sign = '-' if imag < 0 else '+'
    text = f'{_format_fraction(real)}{sign}{imag_text.lstrip("-")}'

    return f'({text})' if parenthesize else text


def _sqrt_fraction(value: fractions.Fraction) -> typing.Optional[fractions.Fraction]:  # pylint: disable=unsubscriptable-object
    if value < 0:
        return None

    numerator = math.isqrt(value.numerator)
    denominator = math.isqrt(value.denominator)

    if numerator * numerator != value.numerator or denominator * denominator != value.denominator:
        return None

    return fractions.Fraction(numerator, denominator)


def _sqrt_gaussian_integer(real: int, imag: int) -> typing.Optional[typing.Tuple[int, int]]:  # pylint: disable=unsubscriptable-object
    """Return ``(a, b)`` with ``(a + b*i)**2 == real + imag*i`` or ``None`` if no such Gaussian integer exists."""
    norm = real * real + imag * imag
    modulus = math.isqrt(norm)

    if modulus * modulus != norm:
        return None

    if (modulus + real) % 2:
        return None

    real_squared = (modulus + real) // 2
    imag_squared = (modulus - real) // 2
    first = math.isqrt(real_squared)
    second = math.isqrt(imag_squared)

    if first * first != real_squared or second * second != imag_squared:
        return None

    if imag < 0:
        second = -second

    if (first * first - second * second, 2 * first * second) != (real, imag):
        return None

    return first, second


def sqrt_scalar(value, field: Field = Field.Q):
    """Return a square root of the scalar within the field, or ``None`` if it has none there.

    Over the Gaussian rationals the root is decided in closed form: after clearing a common denominator ``D`` the
    square root of ``z`` is ``sqrt(z * D**2) / D`` and a Gaussian integer ``a + b*i`` has a Gaussian integer root if
    and only if its norm is a perfect square ``s**2`` and both ``(s + a) / 2`` and ``(s - a) / 2`` are perfect squares.
    The returned root has a positive real part, or a positive imaginary part when the real part vanishes.

    :param value: a scalar of the field.
    :param field: the field in which the root is sought.
    :return: the square root as an element of the field's domain, or ``None``.
    """
    field = Field.from_string(field)
    real, imag = gaussian_parts(field.convert(value))

    if field is Field.Q:
        if imag:
            return None
        root = _sqrt_fraction(real)
        return None if root is None else field.convert(root)

    denominator = real.denominator * imag.denominator // math.gcd(real.denominator, imag.denominator)
    scaled_real = real * denominator * denominator
    scaled_imag = imag * denominator * denominator
    root = _sqrt_gaussian_integer(int(scaled_real), int(scaled_imag))

    if root is None:
        return None

    first, second = root
    if first < 0 or (first == 0 and second < 0):
        first, second = -first, -second

    return QQ_I(QQ(first, denominator), QQ(second, denominator))


def is_square(value, field: Field = Field.Q) -> bool:
    """Return whether the scalar is a square in the given field."""
    return sqrt_scalar(value, field) is not None
