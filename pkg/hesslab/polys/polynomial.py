# -*- coding: utf-8 -*-
"""Exact sparse multivariate polynomials with a declared list of variables and parameters.

A :class:`Polynomial` wraps an element of a ``sympy`` sparse polynomial ring whose generators are the variables
followed by the parameters. Parameters take part in the arithmetic but are excluded from degrees, derivatives and
linear substitutions, so that for instance a Hessian determinant can be an exact polynomial in a parameter ``t``.
"""
import dataclasses
import functools
import typing

from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from hesslab.exceptions import DimensionMismatchError, IndexOutOfRangeError, ZeroPolynomialError
from .scalars import Field, format_scalar, gaussian_parts

__all__ = (
    'PolynomialContext', 'Polynomial', 'GradedParts', 'substitute_linear', 'partial_derivative', 'graded_parts',
    'homogeneous_part'
)

RESERVED_NAMES = ('i',)


@functools.lru_cache(maxsize=None)
def _get_ring(symbols: typing.Tuple[str, ...], field: Field) -> PolyRing:
    return PolyRing(symbols, field.domain, grlex)


@dataclasses.dataclass(frozen=True)
class PolynomialContext:
    """The variables, parameters and scalar field shared by polynomials that can be combined."""

    variables: typing.Tuple[str, ...]
    parameters: typing.Tuple[str, ...] = ()
    field: Field = Field.Q

    def __post_init__(self):
        object.__setattr__(self, 'variables', tuple(self.variables))
        object.__setattr__(self, 'parameters', tuple(self.parameters))
        object.__setattr__(self, 'field', Field.from_string(self.field))

        names = self.variables + self.parameters

        if not self.variables:
            raise ValueError('a polynomial context needs at least one variable.')

        if len(set(names)) != len(names):
            raise ValueError(f'the names `{", ".join(names)}` contain duplicates.')

        for name in names:
            if name in RESERVED_NAMES or not name.isidentifier():
                raise ValueError(f'`{name}` cannot be used as the name of a variable or parameter.')

    @classmethod
    def standard(cls, n: int, parameters: typing.Sequence[str] = (), field: Field = Field.Q) -> 'PolynomialContext':
        """Return the context with variables ``x1`` up to ``xn``."""
        return cls(tuple(f'x{index}' for index in range(1, n + 1)), tuple(parameters), field)

    @property
    def n(self) -> int:
        """Return the number of variables."""
        return len(self.variables)

    @property
    def names(self) -> typing.Tuple[str, ...]:
        return self.variables + self.parameters

    @property
    def ring(self) -> PolyRing:
        """Return the ``sympy`` polynomial ring with the variables followed by the parameters as generators."""
        return _get_ring(self.names, self.field)

    def with_field(self, field: Field) -> 'PolynomialContext':
        """Return the same context over another scalar field."""
        return PolynomialContext(self.variables, self.parameters, field)


class Polynomial:
    """Immutable polynomial in the variables and parameters of a :class:`PolynomialContext`."""

    __slots__ = ('_context', '_element')

    def __init__(self, context: PolynomialContext, element=None):
        """Construct a new instance from an element of the ring of the context.

        :param context: the context of the polynomial.
        :param element: an element of ``context.ring``, or anything that ring can convert; zero when omitted.
        """
        self._context = context
        ring = context.ring

        if element is None:
            element = ring.zero
        elif getattr(element, 'ring', None) is not ring:
            element = ring(context.field.convert(element))

        self._element = element

    @classmethod
    def from_terms(cls, context: PolynomialContext, terms: typing.Mapping[typing.Tuple[int, ...], typing.Any]):
        """Construct a polynomial from a mapping of exponent vectors onto scalars.

        :param context: the context of the polynomial.
        :param terms: mapping of exponent vectors, one entry per variable and parameter, onto coefficients.
        :raises `~hesslab.exceptions.DimensionMismatchError`: if an exponent vector has the wrong length.
        """
        width = len(context.names)
        field = context.field
        converted = {}

        for exponents, coefficient in terms.items():
            exponents = tuple(int(exponent) for exponent in exponents)
            if len(exponents) != width or any(exponent < 0 for exponent in exponents):
                raise DimensionMismatchError(f'`{exponents}` is not a valid exponent vector of length {width}.')
            coefficient = field.convert(coefficient)
            if coefficient:
                converted[exponents] = converted.get(exponents, field.zero) + coefficient

        return cls(context, context.ring.from_dict({key: value for key, value in converted.items() if value}))

    @classmethod
    def variable(cls, context: PolynomialContext, index: int) -> 'Polynomial':
        """Return the variable with the given zero-based index."""
        if not 0 <= index < context.n:
            raise IndexOutOfRangeError(f'variable index `{index + 1}` is outside of 1..{context.n}.')
        return cls(context, context.ring.gens[index])

    @classmethod
    def parameter(cls, context: PolynomialContext, name: str) -> 'Polynomial':
        """Return the parameter with the given name."""
        try:
            index = context.n + context.parameters.index(name)
        except ValueError as exception:
            raise ValueError(f'`{name}` is not a parameter of the context.') from exception
        return cls(context, context.ring.gens[index])

    @classmethod
    def constant(cls, context: PolynomialContext, value) -> 'Polynomial':
        return cls(context, context.ring(context.field.convert(value)))

    @classmethod
    def linear_form(cls, context: PolynomialContext, coefficients: typing.Sequence) -> 'Polynomial':
        """Return the linear form ``sum(c_i * x_i)`` for the given coefficients."""
        if len(coefficients) != context.n:
            raise DimensionMismatchError(f'expected {context.n} coefficients, got {len(coefficients)}.')
        ring = context.ring
        field = context.field
        element = ring.zero
        for coefficient, generator in zip(coefficients, ring.gens):
            element += generator * field.convert(coefficient)
        return cls(context, element)

    @property
    def context(self) -> PolynomialContext:
        return self._context

    @property
    def element(self):
        """Return the underlying element of the ``sympy`` polynomial ring."""
        return self._element

    @property
    def field(self) -> Field:
        return self._context.field

    @property
    def n(self) -> int:
        """Return the number of variables."""
        return self._context.n

    def _wrap(self, element) -> 'Polynomial':
        return Polynomial(self._context, element)

    def _coerce(self, other):
        """Return the ring element for ``other`` or ``NotImplemented`` if it cannot be combined with this one."""
        if isinstance(other, Polynomial):
            if other.context != self._context:
                if other.context.names == self._context.names:
                    field = Field.join(self.field, other.field)
                    raise DimensionMismatchError(
                        f'cannot combine polynomials over different fields, convert both to `{field.value}` first.'
                    )
                raise DimensionMismatchError('cannot combine polynomials with different variables or parameters.')
            return other.element
        try:
            return self._context.ring(self.field.convert(other))
        except Exception:  # pylint: disable=broad-except
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._wrap(self._element + other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._wrap(self._element - other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._wrap(other - self._element)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._wrap(self._element * other)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self._element)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f'`{exponent}` is not a valid exponent, only non-negative integers are supported.')
        return self._wrap(self._element**exponent)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._context.names == other.context.names and self._element == other.element
        try:
            return self._element == self._context.ring(self.field.convert(other))
        except Exception:  # pylint: disable=broad-except
            return NotImplemented

    def __hash__(self):
        return hash((self._context.names, tuple(sorted(self.terms_dict().items(), key=lambda item: item[0]))))

    def __bool__(self):
        return bool(self._element)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f'Polynomial({str(self)!r}, variables={self._context.variables}, field={self.field.value})'

    def exquo(self, other: 'Polynomial') -> 'Polynomial':
        """Return the exact quotient by another polynomial, raising ``ValueError`` when the division has a remainder."""
        try:
            return self._wrap(self._element.exquo(self._coerce(other)))
        except Exception as exception:
            raise ValueError(f'`{other}` does not divide `{self}` exactly.') from exception

    def with_field(self, field: Field) -> 'Polynomial':
        """Return the same polynomial over another field, which must contain all coefficients."""
        context = self._context.with_field(field)
        return Polynomial.from_terms(context, self.terms_dict())

    def terms(self) -> typing.List[typing.Tuple[typing.Tuple[int, ...], typing.Any]]:
        """Return the terms as ``(exponents, coefficient)`` pairs in descending graded lexicographic order."""
        return sorted(self._element.items(), key=lambda item: grlex(item[0]), reverse=True)

    def terms_dict(self) -> typing.Dict[typing.Tuple[int, ...], typing.Any]:
        return dict(self._element.items())

    def term_degree(self, exponents: typing.Tuple[int, ...]) -> int:
        """Return the degree of a term in the variables only."""
        return sum(exponents[:self.n])

    @property
    def degree(self) -> int:
        """Return the total degree in the variables; parameters do not count. The zero polynomial has degree -1."""
        if not self._element:
            return -1
        return max(self.term_degree(exponents) for exponents in self._element.keys())

    def degree_in(self, indices: typing.Iterable[int]) -> int:
        """Return the total degree with respect to a subset of the variables, given by zero-based indices."""
        indices = tuple(indices)
        if not self._element:
            return -1
        return max(sum(exponents[index] for index in indices) for exponents in self._element.keys())

    def is_zero(self) -> bool:
        return not self._element

    def is_constant(self) -> bool:
        """Return whether the polynomial is a scalar, that is free of both variables and parameters."""
        return all(not any(exponents) for exponents in self._element.keys())

    def is_free_of_variables(self) -> bool:
        """Return whether the polynomial only depends on the parameters."""
        return all(not any(exponents[:self.n]) for exponents in self._element.keys())

    def constant_value(self):
        """Return the constant term as a scalar."""
        return self._element.get(self._context.ring.zero_monom, self.field.zero)

    def variables_used(self) -> typing.Tuple[int, ...]:
        """Return the zero-based indices of the variables that occur in the polynomial."""
        return tuple(index for index in range(self.n) if any(exponents[index] for exponents in self._element.keys()))

    def filter_terms(self, predicate: typing.Callable[[typing.Tuple[int, ...]], bool]) -> 'Polynomial':
        """Return the polynomial made of the terms whose exponent vector satisfies the predicate."""
        ring = self._context.ring
        return self._wrap(ring.from_dict({key: value for key, value in self._element.items() if predicate(key)}))

    def diff(self, index: int) -> 'Polynomial':
        """Return the partial derivative with respect to the variable with the given zero-based index."""
        if not 0 <= index < self.n:
            raise IndexOutOfRangeError(f'variable index `{index + 1}` is outside of 1..{self.n}.')
        return self._wrap(self._element.diff(self._context.ring.gens[index]))

    def compose(self, images: typing.Sequence['Polynomial']) -> 'Polynomial':
        """Substitute every variable simultaneously by the corresponding polynomial of ``images``.

        :param images: one polynomial per variable, all of the context of this polynomial.
        :raises `~hesslab.exceptions.DimensionMismatchError`: if the number of images is not the number of variables.
        """
        if len(images) != self.n:
            raise DimensionMismatchError(f'expected {self.n} images for the substitution, got {len(images)}.')
        ring = self._context.ring
        replacements = [(generator, self._coerce(image)) for generator, image in zip(ring.gens, images)]
        return self._wrap(self._element.compose(replacements))

    def evaluate(self, point: typing.Sequence) -> 'Polynomial':
        """Evaluate the variables at a vector of scalars; the result is a polynomial in the parameters only."""
        if len(point) != self.n:
            raise DimensionMismatchError(f'expected a point with {self.n} coordinates, got {len(point)}.')
        return self.compose([Polynomial.constant(self._context, value) for value in point])

    def specialize(self, **values) -> 'Polynomial':
        """Substitute parameters by scalars, for example ``f.specialize(t=0)``."""
        ring = self._context.ring
        replacements = []
        for name, value in values.items():
            if name not in self._context.parameters:
                raise ValueError(f'`{name}` is not a parameter of the polynomial.')
            generator = ring.gens[self.n + self._context.parameters.index(name)]
            replacements.append((generator, ring(self.field.convert(value))))
        if not replacements:
            return self
        return self._wrap(self._element.compose(replacements))

    def homogeneous_part(self, degree: int) -> 'Polynomial':
        """Return the sum of the terms of the given degree in the variables."""
        return self.filter_terms(lambda exponents: self.term_degree(exponents) == degree)

    def linear_coefficients(self) -> typing.Tuple:
        """Return the coefficients of ``x1..xn`` of a polynomial of degree one in the variables without parameters."""
        coefficients = [self.field.zero] * self.n
        for exponents, coefficient in self._element.items():
            if any(exponents[self.n:]) or self.term_degree(exponents) != 1:
                raise ValueError(f'`{self}` is not a linear form.')
            coefficients[exponents.index(1)] = coefficient
        return tuple(coefficients)


def _is_negative(coefficient) -> bool:
    real, imag = gaussian_parts(coefficient)
    return (not imag and real < 0) or (not real and imag < 0)


def _format_monomial(names: typing.Sequence[str], exponents: typing.Sequence[int]) -> str:
    factors = (name if exponent == 1 else f'{name}^{exponent}' for name, exponent in zip(names, exponents) if exponent)
    return '*'.join(factors)


def format_polynomial(polynomial: Polynomial) -> str:
    """Return the canonical text of a polynomial: graded lexicographic term order with explicit ``*``."""
    names = polynomial.context.names
    pieces = []

    for exponents, coefficient in polynomial.terms():
        negative = _is_negative(coefficient)
        magnitude = -coefficient if negative else coefficient
        monomial = _format_monomial(names, exponents)

        if not monomial:
            body = format_scalar(magnitude, parenthesize=True)
        elif magnitude == 1:
            body = monomial
        else:
            body = f'{format_scalar(magnitude, parenthesize=True)}*{monomial}'

        if not pieces:
            pieces.append(f'-{body}' if negative else body)
        else:
            pieces.append(f' - {body}' if negative else f' + {body}')

    return ''.join(pieces) if pieces else '0'


def substitute_linear(f: Polynomial, transform) -> Polynomial:
    """Return ``f(Tx)``, substituting ``x_i`` by ``sum_j T[i][j] * x_j``; parameters are untouched.

    :param f: the polynomial.
    :param transform: a square matrix of scalars, either a ``ScalarMatrix`` or a ``Transform``.
    :raises `~hesslab.exceptions.DimensionMismatchError`: if the matrix is not ``n`` by ``n``.
    """
    entries = transform.entries

    if len(entries) != f.n or any(len(row) != f.n for row in entries):
        raise DimensionMismatchError(f'the transform is not a {f.n}x{f.n} matrix.')

    context = f.context
    if not all(context.field.contains(value) for row in entries for value in row):
        raise DimensionMismatchError(f'the transform has entries outside of the field `{context.field.value}`.')

    images = [Polynomial.linear_form(context, row) for row in entries]

    return f.compose(images)


def partial_derivative(f: Polynomial, index: int) -> Polynomial:
    """Return the partial derivative of ``f`` with respect to variable ``x_index`` with one-based ``index``.

    :raises `~hesslab.exceptions.IndexOutOfRangeError`: if ``index`` is outside of ``1..n``.
    """
    if not 1 <= index <= f.n:
        raise IndexOutOfRangeError(f'variable index `{index}` is outside of 1..{f.n}.')
    return f.diff(index - 1)


def homogeneous_part(f: Polynomial, degree: int) -> Polynomial:
    return f.homogeneous_part(degree)


@dataclasses.dataclass(frozen=True)
class GradedParts:
    """The degree and the homogeneous parts of low degree of a polynomial; the zero polynomial has degree -1."""

    polynomial: Polynomial
    degree: int
    constant_part: Polynomial
    linear_part: Polynomial
    quadratic_part: Polynomial

    @property
    def leading_homogeneous(self) -> Polynomial:
        """Return the homogeneous part of top degree.

        :raises `~hesslab.exceptions.ZeroPolynomialError`: if the polynomial is zero.
        """
        if self.polynomial.is_zero():
            raise ZeroPolynomialError('the zero polynomial has no leading homogeneous part.')
        return self.polynomial.homogeneous_part(self.degree)


def graded_parts(f: Polynomial) -> GradedParts:
    """Return the degree and the constant, linear, quadratic and leading homogeneous parts of ``f``.

    The parts of the zero polynomial are zero; only its leading homogeneous part raises a
    `~hesslab.exceptions.ZeroPolynomialError`.
    """
    return GradedParts(
        polynomial=f,
        degree=f.degree,
        constant_part=f.homogeneous_part(0),
        linear_part=f.homogeneous_part(1),
        quadratic_part=f.homogeneous_part(2),
    )
