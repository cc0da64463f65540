# -*- coding: utf-8 -*-
"""Descent certificates proving that a quadratic form has no nontrivial zero.

A certificate first diagonalizes the form by a congruence and scales it to an integral diagonal form
``sum(a_i * c_i^2)``. A nontrivial zero could then be scaled to a primitive integral vector ``c``. Each step names a
power ``pi^k`` of a prime and the coordinates ``j`` for which every zero of the current form modulo ``pi^k`` has
``pi | c_j``; substituting ``c_j = pi * c_j'`` and dividing the form by the largest common power of ``pi`` gives the
next form. Once every coordinate was divided by ``pi`` at least once, ``pi`` divides all of ``c``, contradicting
primitivity.
"""
import collections
import dataclasses
import math
import typing

from hesslab.common.log import HESSLAB_LOGGER
from hesslab.exceptions import MalformedCertificateError
from hesslab.linalg import ScalarMatrix, diagonalize_symmetric
from hesslab.polys import Field, format_scalar, gaussian_parts, parse_scalar
from .form import QuadraticForm
from .residues import (
    MAX_RESIDUE_RING_SIZE, ResidueRing, candidate_primes, format_integer, integer_ring, norm, parse_integer, valuation
)

__all__ = ('DescentStep', 'DescentCertificate', 'find_descent_certificate', 'check_certificate')

LOGGER = HESSLAB_LOGGER.getChild('quadform')

DescentStep = collections.namedtuple('DescentStep', ['exponent', 'coefficients', 'forced', 'squares'])


@dataclasses.dataclass(frozen=True)
class DescentCertificate:
    """A replayable proof that a quadratic form is anisotropic.

    :param field: the scalar field of the form.
    :param transform: the matrix ``S`` of the diagonalizing congruence, ``S^t G S = diag(d)``.
    :param scale: the scalar ``lambda`` with ``a_i = lambda * d_i`` integral.
    :param prime: the prime ``pi`` of all steps.
    :param steps: the descent steps, each with the exponent ``k`` of its modulus ``pi^k``, the coefficients of the
        form it starts from, the forced coordinates and the residue tables of ``a_i * r^2`` for all ``r`` and for the
        ``r`` not divisible by ``pi``.
    """

    field: Field
    transform: ScalarMatrix
    scale: typing.Any
    prime: typing.Any
    steps: typing.Tuple[DescentStep, ...]

    def modulus(self, step: DescentStep):
        return self.prime**step.exponent

    def to_record(self) -> dict:
        """Return a JSON serializable representation with all scalars as exact strings."""
        return {
            'field': self.field.value,
            'transform': self.transform.to_strings(),
            'scale': format_scalar(self.scale),
            'prime': format_integer(self.prime),
            'steps': [{
                'modulus': format_integer(self.modulus(step)),
                'exponent': step.exponent,
                'coefficients': [format_integer(value) for value in step.coefficients],
                'forced': [index + 1 for index in step.forced],
                'squares': [[sorted(list(residue) for residue in table) for table in pair] for pair in step.squares],
            } for step in self.steps]
        }

    @classmethod
    def from_record(cls, record: dict) -> 'DescentCertificate':
        """Return the certificate of a record produced by :meth:`to_record`.

        :raises `~hesslab.exceptions.MalformedCertificateError`: if the record cannot be interpreted.
        """
        try:
            field = Field.from_string(record['field'])
            transform = ScalarMatrix([[parse_scalar(value, field) for value in row] for row in record['transform']],
                                     field)
            steps = []
            for step in record['steps']:
                squares = tuple(
                    tuple(frozenset(tuple(residue) for residue in table) for table in pair) for pair in step['squares']
                )
                steps.append(
                    DescentStep(
                        int(step['exponent']), tuple(parse_integer(value, field) for value in step['coefficients']),
                        tuple(int(index) - 1 for index in step['forced']), squares
                    )
                )
            return cls(field, transform, parse_scalar(record['scale'], field), parse_integer(record['prime'], field),
                       tuple(steps))
        except (KeyError, TypeError, ValueError) as exception:
            raise MalformedCertificateError(f'the certificate record cannot be interpreted: {exception}') from exception


def _integral_diagonal(form: QuadraticForm) -> typing.Optional[typing.Tuple[ScalarMatrix, typing.Any, typing.List]]:  # pylint: disable=unsubscriptable-object
    """Return ``(S, lambda, a)`` for a nondegenerate form, or ``None`` if the form is degenerate."""
    field = form.field
    transform = diagonalize_symmetric(form.gram).matrix
    diagonal = transform.transpose() * form.gram * transform
    values = [diagonal[index, index] for index in range(form.n)]

    if not all(values):
        return None

    scale = 1
    for value in values:
        for part in gaussian_parts(value):
            scale = scale * part.denominator // math.gcd(scale, part.denominator)

    ring = integer_ring(field)
    coefficients = []
    for value in values:
        real, imag = gaussian_parts(value * scale)
        coefficients.append(ring.convert(int(real)) if field is Field.Q else ring(int(real), int(imag)))

    return transform, field.convert(scale), coefficients


def _normalize(coefficients: typing.List, prime) -> typing.List:
    """Divide all coefficients by the largest power of ``prime`` dividing each of them."""
    common = min(valuation(value, prime) for value in coefficients)
    divisor = prime**common
    return [value // divisor for value in coefficients]


def _exponents(prime) -> typing.List[int]:
    exponents = []
    exponent = 1
    while norm(prime)**exponent <= MAX_RESIDUE_RING_SIZE:
        exponents.append(exponent)
        exponent += 1
    return exponents


def _descend(coefficients: typing.List, prime, field: Field, max_steps: int) -> typing.Optional[typing.List[DescentStep]]:  # pylint: disable=unsubscriptable-object
    """Return the descent steps closing the argument for ``prime``, or ``None`` if no progress can be made."""
    current = _normalize(coefficients, prime)
    divided = [0] * len(current)
    steps = []

    while len(steps) < max_steps:
        for exponent in _exponents(prime):
            ring = ResidueRing(prime**exponent, field)
            forced = ring.forced_indices(current, prime)
            if any(not divided[index] for index in forced):
                break
        else:
            LOGGER.debug('descent by %s stalls at the form %s', format_integer(prime), current)
            return None

        squares = tuple(ring.square_table(value, prime) for value in current)
        steps.append(DescentStep(exponent, tuple(current), forced, squares))
        LOGGER.debug('descent by %s modulo exponent %d forces coordinates %s', format_integer(prime), exponent, forced)

        current = [value * prime**2 if index in forced else value for index, value in enumerate(current)]
        current = _normalize(current, prime)
        divided = [count + 1 if index in forced else count for index, count in enumerate(divided)]

        if all(divided):
            return steps

    return None


def find_descent_certificate(form: QuadraticForm,
                             primes: typing.Sequence = None,
                             max_steps: int = None) -> typing.Optional[DescentCertificate]:  # pylint: disable=unsubscriptable-object
    """Search a descent certificate for the anisotropy of the form.

    :param form: the quadratic form.
    :param primes: the primes to try, by default the small primes and those dividing the diagonal coefficients.
    :param max_steps: the largest number of steps per prime, by default three times the dimension.
    :return: the certificate or ``None`` if none was found; degenerate forms never have one.
    """
    diagonal = _integral_diagonal(form)

    if diagonal is None:
        return None

    transform, scale, coefficients = diagonal
    field = form.field
    ring = integer_ring(field)
    max_steps = max_steps or 3 * form.n

    if primes is None:
        primes = candidate_primes(field, coefficients)

    for prime in primes:
        prime = ring.convert(prime)
        steps = _descend(coefficients, prime, field, max_steps)
        if steps is not None:
            return DescentCertificate(field, transform, scale, prime, tuple(steps))

    return None


def _validate_structure(form: QuadraticForm, certificate: DescentCertificate):
    if not isinstance(certificate, DescentCertificate):
        raise MalformedCertificateError(f'expected a `DescentCertificate`, got `{type(certificate).__name__}`.')

    if certificate.transform.shape != (form.n, form.n):
        raise MalformedCertificateError('the transform of the certificate does not match the dimension of the form.')

    if not certificate.steps:
        raise MalformedCertificateError('the certificate has no steps.')

    for step in certificate.steps:
        if len(step.coefficients) != form.n or len(step.squares) != form.n:
            raise MalformedCertificateError('a step of the certificate does not match the dimension of the form.')
        if not step.forced or any(not 0 <= index < form.n for index in step.forced):
            raise MalformedCertificateError(f'a step forces the invalid coordinates `{step.forced}`.')
        if not isinstance(step.exponent, int) or step.exponent < 1:
            raise MalformedCertificateError(f'a step has the invalid exponent `{step.exponent}`.')


def check_certificate(form: QuadraticForm, certificate: DescentCertificate) -> bool:
    """Replay a descent certificate and return whether it proves that the form is anisotropic.

    Every residue table and every forced coordinate is recomputed by enumerating the finite quotient ring; any
    disagreement with the recorded data makes the certificate invalid.

    :raises `~hesslab.exceptions.MalformedCertificateError`: if the certificate is structurally invalid.
    """
    _validate_structure(form, certificate)

    field = form.field
    prime = certificate.prime
    transform = certificate.transform.with_field(field)

    if certificate.field is not field or not prime or norm(prime) < 2 or not transform.determinant():
        return False

    diagonal = transform.transpose() * form.gram * transform

    if not diagonal.is_diagonal():
        return False

    ring = integer_ring(field)
    expected = []

    for index in range(form.n):
        real, imag = gaussian_parts(diagonal[index, index] * certificate.scale)
        if not (real or imag) or real.denominator != 1 or imag.denominator != 1:
            return False
        expected.append(ring.convert(int(real)) if field is Field.Q else ring(int(real), int(imag)))

    current = _normalize(expected, prime)
    divided = [0] * form.n

    for step in certificate.steps:
        if list(step.coefficients) != current:
            LOGGER.debug('the step coefficients %s differ from the replayed form %s', step.coefficients, current)
            return False

        modulus = prime**step.exponent

        if norm(modulus) > MAX_RESIDUE_RING_SIZE:
            return False

        residues = ResidueRing(modulus, field)
        squares = tuple(residues.square_table(value, prime) for value in current)

        if tuple(tuple(frozenset(table) for table in pair) for pair in step.squares) != squares:
            LOGGER.debug('the recorded residue tables differ from the recomputed ones')
            return False

        if not set(step.forced) <= set(residues.forced_indices(current, prime)):
            return False

        scaled = [value * prime**2 if index in step.forced else value for index, value in enumerate(current)]
        current = _normalize(scaled, prime)
        divided = [count + 1 if index in step.forced else count for index, count in enumerate(divided)]

    return all(divided)
