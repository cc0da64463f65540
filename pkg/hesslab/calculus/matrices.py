# -*- coding: utf-8 -*-
"""Matrices and maps whose entries are polynomials of one common context."""
import typing

from tabulate import tabulate

from hesslab.exceptions import DimensionMismatchError
from hesslab.linalg import ScalarMatrix
from hesslab.polys import Polynomial, PolynomialContext, substitute_linear

__all__ = ('PolyMatrix', 'PolyMap')


def _common_context(polynomials: typing.Iterable[Polynomial]) -> typing.Optional[PolynomialContext]:  # pylint: disable=unsubscriptable-object
    contexts = {polynomial.context for polynomial in polynomials}
    if len(contexts) > 1:
        raise DimensionMismatchError('all entries must share the same variables, parameters and field.')
    return contexts.pop() if contexts else None


class PolyMatrix:
    """Rectangular matrix of polynomials."""

    __slots__ = ('_rows', '_context', '_ncols')

    def __init__(self, rows: typing.Iterable[typing.Iterable[Polynomial]], context: PolynomialContext = None):
        """Construct a new instance.

        :param rows: the rows of the matrix.
        :param context: the context of the entries, only needed for matrices without entries.
        :raises `~hesslab.exceptions.DimensionMismatchError`: if the rows differ in length or the contexts differ.
        """
        rows = tuple(tuple(row) for row in rows)
        widths = {len(row) for row in rows}

        if len(widths) > 1:
            raise DimensionMismatchError('the rows of a matrix must all have the same length.')

        found = _common_context(entry for row in rows for entry in row)

        if found is None and context is None:
            raise DimensionMismatchError('the context of a matrix without entries must be given explicitly.')

        self._rows = rows
        self._context = found or context
        self._ncols = widths.pop() if widths else 0

    @classmethod
    def from_scalar_matrix(cls, context: PolynomialContext, matrix: ScalarMatrix) -> 'PolyMatrix':
        return cls([[Polynomial.constant(context, value) for value in row] for row in matrix.entries], context)

    @classmethod
    def identity(cls, context: PolynomialContext, size: int) -> 'PolyMatrix':
        return cls.from_scalar_matrix(context, ScalarMatrix.identity(size, context.field))

    @property
    def context(self) -> PolynomialContext:
        return self._context

    @property
    def shape(self) -> typing.Tuple[int, int]:
        return len(self._rows), self._ncols

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def entries(self) -> typing.Tuple[typing.Tuple[Polynomial, ...], ...]:
        return self._rows

    def __getitem__(self, key: typing.Tuple[int, int]) -> Polynomial:
        row, col = key
        return self._rows[row][col]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def transpose(self) -> 'PolyMatrix':
        return PolyMatrix(zip(*self._rows), self._context) if self._rows else self

    def map(self, function: typing.Callable[[Polynomial], Polynomial]) -> 'PolyMatrix':
        """Return the matrix obtained by applying a function to every entry."""
        return PolyMatrix([[function(entry) for entry in row] for row in self._rows], self._context)

    def __mul__(self, other):
        if isinstance(other, ScalarMatrix):
            other = PolyMatrix.from_scalar_matrix(self._context, other)

        if not isinstance(other, PolyMatrix):
            return self.map(lambda entry: entry * other)

        if self.ncols != other.nrows:
            raise DimensionMismatchError(f'cannot multiply a {self.shape} matrix with a {other.shape} matrix.')

        zero = Polynomial(self._context)
        columns = list(zip(*other.entries))
        rows = [[sum((a * b for a, b in zip(row, column)), zero) for column in columns] for row in self._rows]

        return PolyMatrix(rows, self._context)

    def __rmul__(self, other):
        if isinstance(other, ScalarMatrix):
            return PolyMatrix.from_scalar_matrix(self._context, other) * self
        return self.map(lambda entry: other * entry)

    def __add__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        if self.shape != other.shape:
            raise DimensionMismatchError(f'cannot add a {self.shape} matrix to a {other.shape} matrix.')
        rows = [[a + b for a, b in zip(left, right)] for left, right in zip(self._rows, other.entries)]
        return PolyMatrix(rows, self._context)

    def __sub__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        return self + other * -1

    def __pow__(self, exponent: int) -> 'PolyMatrix':
        result = PolyMatrix.identity(self._context, self.nrows)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for left, right in zip(self._rows, other.entries) for a, b in zip(left, right)
        )

    def __hash__(self):
        return hash(self._rows)

    def compose(self, images: typing.Sequence[Polynomial]) -> 'PolyMatrix':
        """Substitute the variables of every entry simultaneously by the given polynomials."""
        return self.map(lambda entry: entry.compose(images))

    def substitute_linear(self, transform) -> 'PolyMatrix':
        """Return the matrix with every entry evaluated at ``Tx``."""
        return self.map(lambda entry: substitute_linear(entry, transform))

    def evaluate(self, point: typing.Sequence) -> ScalarMatrix:
        """Evaluate every entry at a point; the entries must not depend on parameters."""
        rows = []
        for row in self._rows:
            values = []
            for entry in row:
                value = entry.evaluate(point)
                if not value.is_constant():
                    raise DimensionMismatchError(f'the entry `{entry}` depends on parameters.')
                values.append(value.constant_value())
            rows.append(values)
        return ScalarMatrix(rows, self._context.field, self.ncols)

    def constant_part(self) -> ScalarMatrix:
        """Return the matrix of constant terms of the entries, the value at the origin."""
        return self.evaluate([0] * self._context.n)

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self._rows for entry in row)

    def is_constant(self) -> bool:
        return all(entry.is_constant() for row in self._rows for entry in row)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._rows[row][col] == self._rows[col][row] for row in range(self.nrows) for col in range(row)
        )

    def is_anti_triangular(self) -> bool:
        """Return whether every entry ``(i, j)`` with ``i + j > n + 1`` is the zero polynomial."""
        size = self.nrows
        return self.is_square() and all(
            self._rows[row][col].is_zero() for row in range(size) for col in range(size) if row + col > size - 1
        )

    def is_anti_diagonal(self) -> bool:
        """Return whether every entry off the anti-diagonal is the zero polynomial."""
        size = self.nrows
        return self.is_square() and all(
            self._rows[row][col].is_zero() for row in range(size) for col in range(size) if row + col != size - 1
        )

    def anti_diagonal(self) -> typing.Tuple[Polynomial, ...]:
        """Return the anti-diagonal entries from the bottom left corner upward, that is ``(n, 1), (n - 1, 2), ...``."""
        size = self.nrows
        return tuple(self._rows[size - 1 - index][index] for index in range(size))

    def is_strictly_lower_triangular(self) -> bool:
        return all(
            self._rows[row][col].is_zero() for row in range(self.nrows) for col in range(self.ncols) if col >= row
        )

    def to_strings(self) -> typing.List[typing.List[str]]:
        return [[str(entry) for entry in row] for row in self._rows]

    def to_record(self) -> dict:
        return {'rows': self.nrows, 'cols': self.ncols, 'entries': self.to_strings()}

    def __str__(self):
        return tabulate(self.to_strings(), tablefmt='plain', disable_numparse=True)

    def __repr__(self):
        return f'PolyMatrix({self.to_strings()})'


class PolyMap:
    """Polynomial map ``K^n -> K^m`` given by its components."""

    __slots__ = ('_components', '_context')

    def __init__(self, components: typing.Sequence[Polynomial], context: PolynomialContext = None):
        components = tuple(components)
        found = _common_context(components)

        if found is None and context is None:
            raise DimensionMismatchError('the context of a map without components must be given explicitly.')

        self._components = components
        self._context = found or context

    @classmethod
    def identity(cls, context: PolynomialContext) -> 'PolyMap':
        return cls([Polynomial.variable(context, index) for index in range(context.n)], context)

    @classmethod
    def linear(cls, context: PolynomialContext, matrix: ScalarMatrix) -> 'PolyMap':
        """Return the map ``x -> M x``."""
        return cls([Polynomial.linear_form(context, row) for row in matrix.entries], context)

    @property
    def context(self) -> PolynomialContext:
        return self._context

    @property
    def components(self) -> typing.Tuple[Polynomial, ...]:
        return self._components

    @property
    def n(self) -> int:
        """Return the number of components."""
        return len(self._components)

    @property
    def degree(self) -> int:
        return max((component.degree for component in self._components), default=-1)

    def __getitem__(self, index: int) -> Polynomial:
        return self._components[index]

    def __iter__(self):
        return iter(self._components)

    def __len__(self):
        return len(self._components)

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self._components == other.components

    def __hash__(self):
        return hash(self._components)

    def compose(self, inner: 'PolyMap') -> 'PolyMap':
        """Return the map ``x -> self(inner(x))``.

        :raises `~hesslab.exceptions.DimensionMismatchError`: if ``inner`` does not have one component per variable.
        """
        if inner.n != self._context.n:
            raise DimensionMismatchError(f'the inner map needs {self._context.n} components, it has {inner.n}.')
        return PolyMap([component.compose(inner.components) for component in self._components], self._context)

    def __call__(self, point: typing.Sequence) -> typing.Tuple[Polynomial, ...]:
        return tuple(component.evaluate(point) for component in self._components)

    def reversed(self) -> 'PolyMap':
        return PolyMap(tuple(reversed(self._components)), self._context)

    def scaled(self, factor) -> 'PolyMap':
        return PolyMap([component * factor for component in self._components], self._context)

    def linear_map(self, matrix: ScalarMatrix) -> 'PolyMap':
        """Return the map ``x -> M self(x)``."""
        if matrix.ncols != self.n:
            raise DimensionMismatchError(f'cannot apply a {matrix.shape} matrix to a map with {self.n} components.')
        zero = Polynomial(self._context)
        components = []
        for row in matrix.entries:
            components.append(sum((component * value for value, component in zip(row, self._components)), zero))
        return PolyMap(components, self._context)

    def substitute_linear(self, transform) -> 'PolyMap':
        """Return the map ``x -> self(Tx)``."""
        return PolyMap([substitute_linear(component, transform) for component in self._components], self._context)

    def is_identity(self) -> bool:
        return self == PolyMap.identity(self._context)

    def to_strings(self) -> typing.List[str]:
        return [str(component) for component in self._components]

    def __str__(self):
        return f'({", ".join(self.to_strings())})'

    def __repr__(self):
        return f'PolyMap({self.to_strings()})'
