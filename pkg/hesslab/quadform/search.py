# -*- coding: utf-8 -*-
"""Deciding isotropy of quadratic forms by certificates and bounded witness search."""
import dataclasses
import enum
import functools
import itertools
import math
import typing

from sympy.polys.domains import ZZ_I

from hesslab.common.log import HESSLAB_LOGGER
from hesslab.polys import Field, format_scalar, gaussian_parts
from .certificate import DescentCertificate, find_descent_certificate
from .form import QuadraticForm

__all__ = (
    'DEFAULT_ISOTROPY_HEIGHT', 'DEFAULT_SEARCH_CANDIDATE_LIMIT', 'SPLIT_SEARCH_DIMENSION', 'IsotropyOutcome',
    'IsotropyResult', 'isotropy_search', 'find_witness'
)

DEFAULT_ISOTROPY_HEIGHT = 50
DEFAULT_SEARCH_CANDIDATE_LIMIT = 2_000_000
SPLIT_SEARCH_DIMENSION = 4

LOGGER = HESSLAB_LOGGER.getChild('quadform')


class IsotropyOutcome(enum.Enum):
    """The three possible outcomes of an isotropy search."""

    WITNESS = 'witness'
    CERTIFICATE = 'anisotropic_certificate'
    UNKNOWN = 'unknown'


@dataclasses.dataclass(frozen=True)
class IsotropyResult:
    """Outcome of :func:`isotropy_search`.

    Exactly one of ``vector`` and ``certificate`` is set for the witness and certificate outcomes; ``height`` is the
    largest height that was searched completely.
    """

    outcome: IsotropyOutcome
    vector: typing.Optional[typing.Tuple] = None  # pylint: disable=unsubscriptable-object
    certificate: typing.Optional[DescentCertificate] = None  # pylint: disable=unsubscriptable-object
    height: int = 0

    @property
    def is_isotropic(self) -> bool:
        return self.outcome is IsotropyOutcome.WITNESS

    @property
    def is_anisotropic(self) -> bool:
        return self.outcome is IsotropyOutcome.CERTIFICATE

    def to_record(self) -> dict:
        record = {'outcome': self.outcome.value, 'height': self.height}
        if self.vector is not None:
            record['vector'] = [format_scalar(value) for value in self.vector]
        if self.certificate is not None:
            record['certificate'] = self.certificate.to_record()
        return record


def _coordinates(field: Field, height: int) -> typing.List:
    """Return the integers of the field of height at most ``height``, ordered by height then lexicographically."""
    return [value for shell in _shells(field, height) for value in shell]


def _shells(field: Field, height: int) -> typing.List[typing.List]:
    """Return the integers of the field grouped by their height ``0..height``, each group in lexicographic order."""
    if field is Field.Q:
        return [[0]] + [[-current, current] for current in range(1, height + 1)]

    shells = [[] for _ in range(height + 1)]
    for real in range(-height, height + 1):
        for imag in range(-height, height + 1):
            shells[max(abs(real), abs(imag))].append(ZZ_I(real, imag))
    return shells


def _height(value, field: Field) -> int:
    if field is Field.Q:
        return abs(int(value))
    return max(abs(int(value.x)), abs(int(value.y)))


def _is_normalized(vector: typing.Sequence, field: Field) -> bool:
    """Return whether the first nonzero coordinate is the chosen representative among its unit multiples."""
    first = next(value for value in vector if value)
    if field is Field.Q:
        return first > 0
    return first.x > 0 and first.y >= 0


def _is_primitive(vector: typing.Sequence, field: Field) -> bool:
    if field is Field.Q:
        return functools.reduce(math.gcd, (int(value) for value in vector)) == 1
    divisor = ZZ_I.zero
    for value in vector:
        divisor = ZZ_I.gcd(divisor, value)
    return divisor.x**2 + divisor.y**2 == 1


def _vectors_of_height(field: Field, n: int, height: int) -> typing.Iterator[typing.Tuple]:
    """Yield the normalized vectors of height exactly ``height`` in lexicographic order.

    Only the shell is generated: the last coordinate is restricted to the integers of height ``height`` when no earlier
    coordinate reaches it, and the first nonzero coordinate to its normalized unit multiples.
    """
    shells = _shells(field, height)
    lower = [value for shell in shells[:-1] for value in shell]
    top = shells[-1]

    def extend(prefix: typing.Tuple, reached: bool):
        if len(prefix) == n:
            yield prefix
            return

        leading = not any(prefix)
        groups = [(top, True)] if len(prefix) == n - 1 and not reached else [(lower, reached), (top, True)]

        for values, flag in groups:
            for value in values:
                if leading and value and not _is_normalized((value,), field):
                    continue
                yield from extend(prefix + (value,), flag)

    yield from extend((), False)


def _enumerate_witness(form: QuadraticForm, height: int,
                       candidate_limit: typing.Optional[int]) -> typing.Tuple[typing.Optional[typing.Tuple], int]:  # pylint: disable=unsubscriptable-object
    field = form.field
    generated = 0

    for current in range(1, height + 1):
        for vector in _vectors_of_height(field, form.n, current):
            generated += 1
            if candidate_limit is not None and generated > candidate_limit:
                LOGGER.info('isotropy search reached the candidate limit %d at height %d', candidate_limit, current)
                return None, current - 1
            if not _is_primitive(vector, field):
                continue
            if not form.evaluate([field.convert(value) for value in vector]):
                return tuple(field.convert(value) for value in vector), current - 1

    return None, height


def _integral_diagonal(form: QuadraticForm) -> typing.Optional[typing.List[typing.Tuple[int, int]]]:  # pylint: disable=unsubscriptable-object
    """Return the diagonal of a diagonal Gram matrix scaled to integers, as real and imaginary parts, or ``None``."""
    gram = form.gram
    size = form.n

    if any(gram[row, col] for row in range(size) for col in range(size) if row != col):
        return None

    parts = [gaussian_parts(gram[index, index]) for index in range(size)]
    scale = 1
    for part in itertools.chain.from_iterable(parts):
        scale = scale * part.denominator // math.gcd(scale, part.denominator)

    return [(int(real * scale), int(imag * scale)) for real, imag in parts]


def _square_code(value, coefficient: typing.Tuple[int, int], stride: int) -> int:
    """Return ``a * z^2`` for the coefficient ``a`` and the integer ``z``, encoded as ``real * stride + imag``."""
    real, imag = (int(value.x), int(value.y)) if ZZ_I.of_type(value) else (int(value), 0)
    square_real, square_imag = real * real - imag * imag, 2 * real * imag
    first, second = coefficient
    return (first * square_real - second * square_imag) * stride + first * square_imag + second * square_real


def _half_vectors(columns: typing.Sequence[typing.Sequence[typing.Tuple[int, int]]]) -> typing.Iterator[typing.Tuple[int, int]]:  # pylint: disable=line-too-long
    """Yield ``(height, code)`` for every vector of a group of coordinates, given ``(height, code)`` per coordinate."""
    partial = [(0, 0)]
    for column in columns[:-1]:
        partial = [(max(height, top), code + shift) for height, code in partial for top, shift in column]

    last = columns[-1]
    for height, code in partial:
        for top, shift in last:
            yield (height if height > top else top), code + shift


def _minimal_split_height(left: typing.Sequence, right: typing.Sequence) -> typing.Optional[int]:  # pylint: disable=unsubscriptable-object
    """Return the smallest height of a nonzero vector on which the two halves of the form cancel, or ``None``.

    The smallest height of a left vector is recorded per value; the right vectors are then streamed against it.
    """
    table = {}
    best = None

    for height, code in _half_vectors(left):
        known = table.get(code)
        if known is None or height < known:
            table[code] = height
        if not code and height and (best is None or height < best):
            best = height

    for height, code in _half_vectors(right):
        if not code:
            if height and (best is None or height < best):
                best = height
            continue
        known = table.get(-code)
        if known is not None:
            current = max(known, height)
            if best is None or current < best:
                best = current

    return best


def _first_split_witness(form: QuadraticForm, values: typing.Sequence, columns: typing.Sequence,
                         height: int) -> typing.Optional[typing.Tuple]:  # pylint: disable=unsubscriptable-object
    """Return the first normalized primitive witness of height at most ``height`` in lexicographic order."""
    field = form.field
    middle = form.n // 2
    cut = sum(1 for value in values if _height(value, field) <= height)
    left = [column[:cut] for column in columns[:middle]]
    right = [column[:cut] for column in columns[middle:]]
    reachable = {code for _, code in _half_vectors(right)}

    for left_indices in itertools.product(range(cut), repeat=middle):
        first = tuple(values[index] for index in left_indices)
        zero = not any(first)
        code = sum(column[index][1] for column, index in zip(left, left_indices))

        if (not zero and not _is_normalized(first, field)) or -code not in reachable:
            continue

        for right_indices in itertools.product(range(cut), repeat=form.n - middle):
            if sum(column[index][1] for column, index in zip(right, right_indices)) != -code:
                continue
            second = tuple(values[index] for index in right_indices)
            if zero and (not any(second) or not _is_normalized(second, field)):
                continue
            if _is_primitive(first + second, field):
                return first + second

    return None


def _split_witness(form: QuadraticForm, coefficients: typing.List[typing.Tuple[int, int]], height: int,
                   candidate_limit: typing.Optional[int]) -> typing.Tuple[typing.Optional[typing.Tuple], int]:  # pylint: disable=unsubscriptable-object
    """Search a diagonal form by matching the values of its first and second half of the coordinates.

    The halves are tabulated separately, so the work grows with the square root of the number of vectors. The witness
    is the same as the one of the plain enumeration.
    """
    field = form.field
    middle = form.n // 2

    def cost(bound: int) -> int:
        count = len(_coordinates(field, bound))
        return count**middle + count**(form.n - middle)

    if candidate_limit is not None:
        limited = height
        while limited and cost(limited) > candidate_limit:
            limited -= 1
        if limited < height:
            LOGGER.info('split isotropy search lowered the height to %d for the limit %d', limited, candidate_limit)
        if not limited:
            return None, 0
        height = limited

    bound = 2 * height * height * sum(abs(real) + abs(imag) for real, imag in coefficients) + 1
    stride = 2 * bound + 1
    values = _coordinates(field, height)
    columns = [[(_height(value, field), _square_code(value, coefficient, stride)) for value in values]
               for coefficient in coefficients]

    minimum = _minimal_split_height(columns[:middle], columns[middle:])

    if minimum is None:
        LOGGER.debug('split isotropy search found no witness up to height %d', height)
        return None, height

    vector = _first_split_witness(form, values, columns, minimum)
    vector = tuple(field.convert(value) for value in vector)

    assert not form.evaluate(vector)

    return vector, minimum - 1


def find_witness(
    form: QuadraticForm,
    height: int,
    candidate_limit: typing.Optional[int] = DEFAULT_SEARCH_CANDIDATE_LIMIT,  # pylint: disable=unsubscriptable-object
) -> typing.Tuple[typing.Optional[typing.Tuple], int]:  # pylint: disable=unsubscriptable-object
    """Search a primitive integral isotropic vector by increasing height.

    Diagonal forms in at least ``SPLIT_SEARCH_DIMENSION`` variables are searched by matching the values of two halves
    of the coordinates, other forms by enumerating the vectors of each height.

    :param form: the quadratic form.
    :param height: the largest coordinate height to search.
    :param candidate_limit: the largest number of generated candidates, or ``None`` for no limit; the split search
        counts the vectors of both halves and lowers the height until they fit.
    :return: the first witness in the order height then lexicographic, or ``None``, together with the largest height
        that was searched completely.
    """
    coefficients = _integral_diagonal(form) if form.n >= SPLIT_SEARCH_DIMENSION else None

    if coefficients is not None:
        return _split_witness(form, coefficients, height, candidate_limit)

    return _enumerate_witness(form, height, candidate_limit)


def isotropy_search(
    form: QuadraticForm,
    height: int = DEFAULT_ISOTROPY_HEIGHT,
    candidate_limit: typing.Optional[int] = DEFAULT_SEARCH_CANDIDATE_LIMIT,  # pylint: disable=unsubscriptable-object
) -> IsotropyResult:
    """Decide whether the form has a nontrivial zero.

    A degenerate form is isotropic with a kernel vector as witness. Otherwise a descent certificate is sought first,
    since it excludes witnesses of any height; then a witness is searched by height up to ``height``.

    :param form: the quadratic form.
    :param height: the largest coordinate height to enumerate, at least one.
    :param candidate_limit: the largest number of candidate vectors to generate, or ``None`` for no limit.
    :return: the result; its outcome is unknown if neither a witness nor a certificate was found.
    """
    if height < 1:
        raise ValueError(f'the search height must be at least one, got `{height}`.')

    kernel = form.gram.nullspace()

    if kernel:
        return IsotropyResult(IsotropyOutcome.WITNESS, vector=tuple(kernel[0]), height=0)

    certificate = find_descent_certificate(form)

    if certificate is not None:
        LOGGER.debug('found a descent certificate with %d steps', len(certificate.steps))
        return IsotropyResult(IsotropyOutcome.CERTIFICATE, certificate=certificate, height=height)

    vector, completed = find_witness(form, height, candidate_limit)

    if vector is not None:
        return IsotropyResult(IsotropyOutcome.WITNESS, vector=vector, height=completed + 1)

    return IsotropyResult(IsotropyOutcome.UNKNOWN, height=completed)
