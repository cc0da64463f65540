# -*- coding: utf-8 -*-
"""Immutable matrices of exact scalars and invertible transforms with a cached inverse."""
import collections
import typing

from sympy.polys.matrices import DomainMatrix
from tabulate import tabulate

from hesslab.exceptions import DimensionMismatchError, SingularMatrixError
from hesslab.polys.scalars import Field, format_scalar

__all__ = ('ScalarMatrix', 'Transform', 'MatrixOps', 'field_matrix_ops', 'nullspace')

MatrixOps = collections.namedtuple('MatrixOps', ['product', 'determinant', 'inverse', 'transpose'])


class ScalarMatrix:
    """Rectangular matrix of scalars of a single field.

    Entries are stored as a tuple of row tuples of elements of the ``sympy`` domain of the field. The heavier operations
    (products, determinants, inverses and row reduction) are delegated to :class:`sympy.polys.matrices.DomainMatrix`.
    """

    __slots__ = ('_rows', '_ncols', '_field')

    def __init__(self, rows: typing.Iterable[typing.Iterable], field: Field = Field.Q, ncols: int = None):
        """Construct a new instance.

        :param rows: the rows of the matrix, each an iterable of scalars the field can convert.
        :param field: the scalar field of the entries.
        :param ncols: the number of columns, only needed when there are no rows.
        :raises `~hesslab.exceptions.DimensionMismatchError`: if the rows do not all have the same length.
        """
        field = Field.from_string(field)
        rows = tuple(tuple(field.convert(value) for value in row) for row in rows)
        widths = {len(row) for row in rows}

        if len(widths) > 1:
            raise DimensionMismatchError('the rows of a matrix must all have the same length.')

        self._rows = rows
        self._ncols = widths.pop() if widths else (ncols or 0)
        self._field = field

    @classmethod
    def identity(cls, n: int, field: Field = Field.Q) -> 'ScalarMatrix':
        return cls([[1 if row == col else 0 for col in range(n)] for row in range(n)], field, n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field = Field.Q) -> 'ScalarMatrix':
        return cls([[0] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def flipped_identity(cls, n: int, field: Field = Field.Q) -> 'ScalarMatrix':
        """Return the matrix with ones on the anti-diagonal, the order reversing permutation."""
        return cls([[1 if row + col == n - 1 else 0 for col in range(n)] for row in range(n)], field, n)

    @classmethod
    def diagonal(cls, values: typing.Sequence, field: Field = Field.Q) -> 'ScalarMatrix':
        size = len(values)
        return cls([[values[row] if row == col else 0 for col in range(size)] for row in range(size)], field, size)

    @classmethod
    def from_columns(cls, columns: typing.Sequence[typing.Sequence], field: Field = Field.Q) -> 'ScalarMatrix':
        """Return the matrix with the given columns."""
        if not columns:
            raise DimensionMismatchError('a matrix needs at least one column.')
        return cls(list(zip(*columns)), field, len(columns))

    @property
    def field(self) -> Field:
        return self._field

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
    def entries(self) -> typing.Tuple[typing.Tuple, ...]:
        return self._rows

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, key: typing.Tuple[int, int]):
        row, col = key
        return self._rows[row][col]

    def row(self, index: int) -> typing.Tuple:
        return self._rows[index]

    def column(self, index: int) -> typing.Tuple:
        return tuple(row[index] for row in self._rows)

    def columns(self) -> typing.List[typing.Tuple]:
        return [self.column(index) for index in range(self.ncols)]

    def with_field(self, field: Field) -> 'ScalarMatrix':
        return ScalarMatrix(self._rows, field, self._ncols)

    def _aligned(self, other: 'ScalarMatrix') -> typing.Tuple['ScalarMatrix', 'ScalarMatrix']:
        field = Field.join(self.field, other.field)
        return self.with_field(field), other.with_field(field)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self._rows], self.shape, self._field.domain)

    @classmethod
    def from_domain_matrix(cls, matrix: DomainMatrix, field: Field) -> 'ScalarMatrix':
        return cls(matrix.to_list(), field, matrix.shape[1])

    def transpose(self) -> 'ScalarMatrix':
        return ScalarMatrix([self.column(index) for index in range(self.ncols)], self._field, self.nrows)

    @property
    def T(self) -> 'ScalarMatrix':  # pylint: disable=invalid-name
        return self.transpose()

    def __mul__(self, other):
        if isinstance(other, ScalarMatrix):
            left, right = self._aligned(other)
            if left.ncols != right.nrows:
                raise DimensionMismatchError(f'cannot multiply a {left.shape} matrix with a {right.shape} matrix.')
            if not left.nrows or not right.ncols or not left.ncols:
                return ScalarMatrix.zeros(left.nrows, right.ncols, left.field)
            product = left.to_domain_matrix() * right.to_domain_matrix()
            return ScalarMatrix.from_domain_matrix(product, left.field)

        try:
            value = self._field.convert(other)
        except Exception:  # pylint: disable=broad-except
            return NotImplemented

        return ScalarMatrix([[entry * value for entry in row] for row in self._rows], self._field, self._ncols)

    __rmul__ = __mul__

    def __add__(self, other: 'ScalarMatrix') -> 'ScalarMatrix':
        left, right = self._aligned(other)
        if left.shape != right.shape:
            raise DimensionMismatchError(f'cannot add a {left.shape} matrix to a {right.shape} matrix.')
        rows = [[a + b for a, b in zip(row_a, row_b)] for row_a, row_b in zip(left.entries, right.entries)]
        return ScalarMatrix(rows, left.field, left.ncols)

    def __neg__(self) -> 'ScalarMatrix':
        return self * -1

    def __sub__(self, other: 'ScalarMatrix') -> 'ScalarMatrix':
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other.entries

    def __hash__(self):
        return hash((self.shape, self._rows))

    def apply(self, vector: typing.Sequence) -> typing.Tuple:
        """Return the product of the matrix with a column vector."""
        if len(vector) != self.ncols:
            raise DimensionMismatchError(f'expected a vector of length {self.ncols}, got {len(vector)}.')
        vector = [self._field.convert(value) for value in vector]
        return tuple(sum((a * b for a, b in zip(row, vector)), self._field.zero) for row in self._rows)

    def bilinear(self, left: typing.Sequence, right: typing.Sequence):
        """Return ``left^t * self * right``."""
        image = self.apply(right)
        return sum((self._field.convert(a) * b for a, b in zip(left, image)), self._field.zero)

    def determinant(self):
        """Return the determinant of a square matrix.

        :raises `~hesslab.exceptions.DimensionMismatchError`: if the matrix is not square.
        """
        if not self.is_square():
            raise DimensionMismatchError(f'the determinant of a non-square {self.shape} matrix is not defined.')
        if not self.nrows:
            return self._field.one
        return self.to_domain_matrix().det()

    def inverse(self) -> 'ScalarMatrix':
        """Return the exact inverse.

        :raises `~hesslab.exceptions.SingularMatrixError`: if the determinant is zero.
        """
        if not self.determinant():
            raise SingularMatrixError('the matrix is singular and has no inverse.')
        if not self.nrows:
            return self
        return ScalarMatrix.from_domain_matrix(self.to_domain_matrix().inv(), self._field)

    def rref(self) -> typing.Tuple['ScalarMatrix', typing.Tuple[int, ...]]:
        """Return the reduced row echelon form and the pivot columns."""
        if not self.nrows or not self.ncols:
            return self, ()
        reduced, pivots = self.to_domain_matrix().rref()
        return ScalarMatrix.from_domain_matrix(reduced, self._field), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> typing.List[typing.Tuple]:
        """Return a basis of the right kernel, one vector per free column of the row echelon form."""
        reduced, pivots = self.rref()
        field = self._field
        basis = []

        for free in range(self.ncols):
            if free in pivots:
                continue
            vector = [field.zero] * self.ncols
            vector[free] = field.one
            for row, pivot in enumerate(pivots):
                vector[pivot] = -reduced[row, free]
            basis.append(tuple(vector))

        return basis

    def submatrix(self, rows: typing.Sequence[int], cols: typing.Sequence[int]) -> 'ScalarMatrix':
        return ScalarMatrix([[self._rows[row][col] for col in cols] for row in rows], self._field, len(cols))

    def embed(self, n: int, offset: int) -> 'ScalarMatrix':
        """Return the ``n`` by ``n`` identity with this square block placed at ``(offset, offset)``."""
        size = self.nrows
        rows = []
        for row in range(n):
            current = []
            for col in range(n):
                if offset <= row < offset + size and offset <= col < offset + size:
                    current.append(self._rows[row - offset][col - offset])
                else:
                    current.append(1 if row == col else 0)
            rows.append(current)
        return ScalarMatrix(rows, self._field, n)

    def is_zero(self) -> bool:
        return not any(value for row in self._rows for value in row)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._rows[row][col] == self._rows[col][row] for row in range(self.nrows) for col in range(row)
        )

    def is_anti_triangular(self) -> bool:
        """Return whether every entry below the anti-diagonal is zero."""
        size = self.nrows
        return self.is_square() and all(
            not self._rows[row][col] for row in range(size) for col in range(size) if row + col > size - 1
        )

    def is_lower_triangular(self, strict: bool = False) -> bool:
        return all(not self._rows[row][col] for row in range(self.nrows) for col in range(self.ncols) if col > row or
                   (strict and col == row))

    def is_upper_triangular(self) -> bool:
        return self.transpose().is_lower_triangular()

    def is_diagonal(self) -> bool:
        return self.is_lower_triangular() and self.is_upper_triangular()

    def to_strings(self) -> typing.List[typing.List[str]]:
        """Return the entries as canonical scalar strings."""
        return [[format_scalar(value) for value in row] for row in self._rows]

    def to_record(self) -> dict:
        return {'rows': self.nrows, 'cols': self.ncols, 'entries': self.to_strings()}

    def __str__(self):
        return tabulate(self.to_strings(), tablefmt='plain', disable_numparse=True)

    def __repr__(self):
        return f'ScalarMatrix({self.to_strings()}, field={self._field.value})'


class Transform:
    """Invertible square matrix together with its exact inverse."""

    __slots__ = ('_matrix', '_inverse')

    def __init__(self, matrix, field: Field = None, inverse: ScalarMatrix = None):
        """Construct a new instance.

        :param matrix: a square ``ScalarMatrix`` or a nested sequence of scalars.
        :param field: the field, only used when ``matrix`` is not yet a ``ScalarMatrix``.
        :param inverse: the inverse, if already known; it is verified.
        :raises `~hesslab.exceptions.SingularMatrixError`: if the matrix is singular.
        """
        if not isinstance(matrix, ScalarMatrix):
            matrix = ScalarMatrix(matrix, field or Field.Q)

        if not matrix.is_square():
            raise DimensionMismatchError(f'a transform must be square, got shape {matrix.shape}.')

        if inverse is None or matrix * inverse != ScalarMatrix.identity(matrix.nrows, matrix.field):
            inverse = matrix.inverse()

        self._matrix = matrix
        self._inverse = inverse

    @classmethod
    def identity(cls, n: int, field: Field = Field.Q) -> 'Transform':
        identity = ScalarMatrix.identity(n, field)
        return cls(identity, inverse=identity)

    @classmethod
    def permutation(cls, images: typing.Sequence[int], field: Field = Field.Q) -> 'Transform':
        """Return the transform whose column ``k`` is the unit vector ``images[k]`` (zero based)."""
        size = len(images)
        columns = [[1 if row == image else 0 for row in range(size)] for image in images]
        matrix = ScalarMatrix.from_columns(columns, field)
        return cls(matrix, inverse=matrix.transpose())

    @classmethod
    def swap(cls, n: int, first: int, second: int, field: Field = Field.Q) -> 'Transform':
        """Return the transposition of the variables with zero based indices ``first`` and ``second``."""
        images = list(range(n))
        images[first], images[second] = images[second], images[first]
        return cls.permutation(images, field)

    @classmethod
    def reversal(cls, n: int, field: Field = Field.Q) -> 'Transform':
        flipped = ScalarMatrix.flipped_identity(n, field)
        return cls(flipped, inverse=flipped)

    @property
    def matrix(self) -> ScalarMatrix:
        return self._matrix

    @property
    def inverse(self) -> ScalarMatrix:
        return self._inverse

    @property
    def entries(self) -> typing.Tuple[typing.Tuple, ...]:
        return self._matrix.entries

    @property
    def n(self) -> int:
        return self._matrix.nrows

    @property
    def field(self) -> Field:
        return self._matrix.field

    def inverted(self) -> 'Transform':
        return Transform(self._inverse, inverse=self._matrix)

    def determinant(self):
        return self._matrix.determinant()

    def column(self, index: int) -> typing.Tuple:
        return self._matrix.column(index)

    def with_field(self, field: Field) -> 'Transform':
        return Transform(self._matrix.with_field(field), inverse=self._inverse.with_field(field))

    def __mul__(self, other):
        """Compose with another transform, the matrix of the result being ``self.matrix * other.matrix``."""
        if isinstance(other, Transform):
            return Transform(self._matrix * other.matrix, inverse=other.inverse * self._inverse)
        if isinstance(other, ScalarMatrix):
            return Transform(self._matrix * other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Transform):
            return NotImplemented
        return self._matrix == other.matrix

    def __hash__(self):
        return hash(self._matrix)

    def __str__(self):
        return str(self._matrix)

    def __repr__(self):
        return f'Transform({self._matrix.to_strings()}, field={self.field.value})'


def nullspace(matrix: ScalarMatrix) -> typing.List[typing.Tuple]:
    """Return an exact basis of the right kernel of the matrix; empty if and only if it has full column rank."""
    return matrix.nullspace()


def field_matrix_ops(first: ScalarMatrix, second: ScalarMatrix = None) -> MatrixOps:
    """Return the product ``first * second`` and the determinant, inverse and transpose of ``first``.

    :param first: a matrix; it must be square for the determinant and inverse.
    :param second: optional right factor of the product.
    :raises `~hesslab.exceptions.DimensionMismatchError`: if the product or determinant is undefined.
    :raises `~hesslab.exceptions.SingularMatrixError`: if ``first`` is singular.
    """
    product = first * second if second is not None else None
    return MatrixOps(product, first.determinant(), first.inverse(), first.transpose())
