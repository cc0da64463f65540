# -*- coding: utf-8 -*-
"""Access to the named fixtures packaged as JSON metadata in `hesslab.metadata.fixtures`."""
import fractions
import functools
import json
import math
import pathlib
import typing

from importlib_resources import files

from hesslab.exceptions import InvalidArgumentError, UnknownFixtureError
from hesslab.metadata import fixtures as fixtures_metadata
from hesslab.polys import Field, Polynomial, PolynomialContext, parse_poly

__all__ = (
    'FIXTURE_NAMES', 'get_fixture_metadata', 'get_fixture_metadata_filepath', 'fixture_context', 'fixture_polynomial',
    'counterexample_determinant', 'recorded_coefficients'
)

FIXTURE_NAMES = ('gn-counterexample', 'dillen4', 'qi-form')


def get_fixture_metadata_filepath(name: str) -> pathlib.Path:
    """Return the filepath to the metadata JSON of a named fixture.

    :raises `~hesslab.exceptions.UnknownFixtureError`: if the name is not one of ``FIXTURE_NAMES``.
    """
    if name not in FIXTURE_NAMES:
        raise UnknownFixtureError(f'`{name}` is not a known fixture, choose from {", ".join(FIXTURE_NAMES)}.')

    return files(fixtures_metadata) / f'{name}.json'


@functools.lru_cache(maxsize=None)
def _load(name: str) -> str:
    filepath = get_fixture_metadata_filepath(name)
    try:
        with open(filepath, 'r') as stream:
            return stream.read()
    except OSError as exception:
        raise OSError(f'error while opening the metadata file of the fixture `{name}`.') from exception


def get_fixture_metadata(name: str) -> dict:
    """Return the metadata dictionary of a named fixture.

    :raises `~hesslab.exceptions.UnknownFixtureError`: if the name is not one of ``FIXTURE_NAMES``.
    """
    return json.loads(_load(name))


def _variable_count(metadata: dict, n: int = None) -> int:
    if n is None:
        return metadata['variables'][0]

    minimum = min(metadata['variables'])
    fixed = len(metadata['variables']) == 1 and 'tail' not in metadata

    if (fixed and n != minimum) or n < minimum:
        raise InvalidArgumentError(f'the fixture `{metadata["name"]}` is not defined for {n} variables.')

    return n


def fixture_context(name: str, n: int = None) -> PolynomialContext:
    """Return the context of a named fixture with ``n`` variables, defaulting to its first listed size."""
    metadata = get_fixture_metadata(name)
    count = _variable_count(metadata, n)
    return PolynomialContext.standard(count, metadata['parameters'], Field.from_string(metadata['field']))


def fixture_polynomial(name: str, n: int = None) -> Polynomial:
    """Return the polynomial of a named fixture.

    For a family the terms ``x_k^(k + offset)`` for ``k`` from the tail start up to ``n`` are added.

    :raises `~hesslab.exceptions.InvalidArgumentError`: if the fixture is not defined for ``n`` variables.
    """
    metadata = get_fixture_metadata(name)
    context = fixture_context(name, n)
    polynomial = parse_poly(metadata['polynomial'], context)
    tail = metadata.get('tail')

    if tail is not None:
        for index in range(tail['start'], context.n + 1):
            polynomial += Polynomial.variable(context, index - 1)**(index + tail['exponent_offset'])

    return polynomial


def counterexample_determinant(n: int) -> Polynomial:
    """Return the closed form ``-(n+1)! (n+2)! / 450 * t * x1^9 * (x2 + x1 x3) * x5^5 ... xn^n`` of the Hessian
    determinant of the counterexample family.

    :raises `~hesslab.exceptions.InvalidArgumentError`: if ``n < 4``.
    """
    metadata = get_fixture_metadata('gn-counterexample')
    context = fixture_context('gn-counterexample', n)
    closed_form = metadata['determinant']
    coefficient = context.field.convert(
        fractions.Fraction(-math.factorial(n + 1) * math.factorial(n + 2), closed_form['denominator'])
    )
    determinant = parse_poly(closed_form['factor'], context) * coefficient

    for index in range(metadata['tail']['start'], n + 1):
        determinant *= Polynomial.variable(context, index - 1)**index

    return determinant


def recorded_coefficients(name: str) -> typing.Dict[int, str]:
    """Return the determinant coefficients recorded for specific sizes, keyed by the number of variables."""
    metadata = get_fixture_metadata(name)
    return {int(key): value for key, value in metadata.get('determinant', {}).get('coefficients', {}).items()}
