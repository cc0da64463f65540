# -*- coding: utf-8 -*-
"""Reusable options for CLI commands."""
import click

from hesslab.common.log import LOG_LEVELS
from hesslab.gradmap import DEFAULT_DEGREE_LIMIT
from hesslab.polys import Field
from hesslab.quadform import DEFAULT_ISOTROPY_HEIGHT
from hesslab.triangulate import DEFAULT_WEIGHT_BUDGET
from .types import FieldParamType, ParametersParamType, WeightsParamType

__all__ = (
    'OverridableOption', 'VERBOSITY', 'VARIABLES', 'FIELD', 'PARAMETERS', 'OUTPUT', 'FILE', 'HEIGHT', 'BUDGET',
    'DEGREE_LIMIT', 'WEIGHTS', 'TRACEBACK'
)


class OverridableOption:
    """Wrapper around `click.option` that stores the declaration and allows keyword arguments to be overridden.

    Every use creates a fresh `click.option` decorator, so the same option can be attached to several commands with
    command specific defaults or help texts: ``@options.HEIGHT(default=10)``.
    """

    def __init__(self, *args, **kwargs):
        self.args = args
        self.kwargs = kwargs

    def __call__(self, **kwargs):
        """Return the `click.option` decorator with the stored keyword arguments updated by the given ones."""
        kw_copy = self.kwargs.copy()
        kw_copy.update(kwargs)
        return click.option(*self.args, **kw_copy)


VERBOSITY = OverridableOption(
    '-v',
    '--verbosity',
    type=click.Choice(list(LOG_LEVELS), case_sensitive=False),
    default='warning',
    show_default=True,
    help='Set the level of the log messages written to stderr.'
)

VARIABLES = OverridableOption(
    '-n',
    '--n',
    'n',
    type=click.IntRange(min=1),
    required=False,
    help='Number of variables x1..xn; inferred from the largest index in the input when omitted.'
)

FIELD = OverridableOption(
    '-F',
    '--field',
    type=FieldParamType(),
    default=Field.Q.value,
    show_default=True,
    help='Scalar field of the coefficients.'
)

PARAMETERS = OverridableOption(
    '-p',
    '--params',
    'parameters',
    type=ParametersParamType(),
    default='',
    help='Names of the parameters of the polynomial, separated by commas.'
)

OUTPUT = OverridableOption(
    '-o',
    '--out',
    'output',
    type=click.Choice(['text', 'json']),
    default='text',
    show_default=True,
    help='Render the result as text or as a JSON record.'
)

FILE = OverridableOption(
    '-f',
    '--file',
    'file',
    type=click.File('r'),
    required=False,
    help='Read the input from a file instead of the positional argument.'
)

HEIGHT = OverridableOption(
    '--height',
    type=click.IntRange(min=1),
    default=DEFAULT_ISOTROPY_HEIGHT,
    show_default=True,
    help='Largest coordinate height of the isotropic vector search.'
)

BUDGET = OverridableOption(
    '--budget',
    type=click.IntRange(min=1),
    default=DEFAULT_WEIGHT_BUDGET,
    show_default=True,
    help='Largest number of steps of the weight search.'
)

DEGREE_LIMIT = OverridableOption(
    '--degree-limit',
    type=click.IntRange(min=1),
    default=DEFAULT_DEGREE_LIMIT,
    show_default=True,
    help='Largest degree allowed for a component of the inverse.'
)

WEIGHTS = OverridableOption(
    '-w',
    '--weights',
    type=WeightsParamType(),
    required=True,
    help='Rational weights of the variables separated by commas, e.g. `1,3/2,2`.'
)

TRACEBACK = OverridableOption(
    '-t', '--traceback', is_flag=True, help='Include the stacktrace if an exception is encountered.'
)
