# -*- coding: utf-8 -*-
# pylint: disable=no-self-use
"""Custom parameter types for command line interface commands."""
import click

from hesslab.exceptions import HesslabError
from hesslab.fixtures import FIXTURE_NAMES
from hesslab.polys import Field
from hesslab.weights import WeightFn

__all__ = ('FieldParamType', 'ParametersParamType', 'WeightsParamType', 'FixtureParamType')


class FieldParamType(click.ParamType):
    """Parameter type for the scalar field, ``Q`` or ``Qi``."""

    name = 'field'

    def convert(self, value, _, __):
        """Convert the label to the corresponding `Field`.

        :raises: `click.BadParameter` if the label is not a supported field.
        """
        if isinstance(value, Field):
            return value

        try:
            return Field.from_string(value)
        except HesslabError as exception:
            raise click.BadParameter(str(exception)) from exception

    def complete(self, _, incomplete):
        """Return possible completions based on an incomplete value.

        :returns: list of tuples of valid field labels (matching incomplete) and a description
        """
        return [(field.value, '') for field in Field if field.value.lower().startswith(incomplete.lower())]


class ParametersParamType(click.ParamType):
    """Parameter type for the names of the parameters of a polynomial, separated by commas or spaces."""

    name = 'parameters'

    def convert(self, value, _, __):
        """Convert the text to a tuple of names.

        :raises: `click.BadParameter` if a name is not a valid identifier.
        """
        if isinstance(value, tuple):
            return value

        names = tuple(name for name in value.replace(',', ' ').split() if name)

        for name in names:
            if not name.isidentifier():
                raise click.BadParameter(f'`{name}` is not a valid parameter name.')

        return names


class WeightsParamType(click.ParamType):
    """Parameter type for rational weights of the variables, separated by commas, e.g. ``1,3/2,2``."""

    name = 'weights'

    def convert(self, value, _, __):
        """Convert the text to a `WeightFn`.

        :raises: `click.BadParameter` if a weight is not a rational number.
        """
        if isinstance(value, WeightFn):
            return value

        try:
            return WeightFn(weight.strip() for weight in value.split(','))
        except HesslabError as exception:
            raise click.BadParameter(str(exception)) from exception


class FixtureParamType(click.ParamType):
    """Parameter type for the name of a packaged fixture."""

    name = 'fixture'

    def convert(self, value, _, __):
        """Validate the fixture name.

        :raises: `click.BadParameter` if the name is not a known fixture.
        """
        if value not in FIXTURE_NAMES:
            raise click.BadParameter(f'`{value}` is not a known fixture, choose from {", ".join(FIXTURE_NAMES)}.')

        return value

    def complete(self, _, incomplete):
        """Return possible completions based on an incomplete value.

        :returns: list of tuples of fixture names (matching incomplete) and a description
        """
        return [(name, '') for name in FIXTURE_NAMES if name.startswith(incomplete)]
