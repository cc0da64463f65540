# -*- coding: utf-8 -*-
# pylint: disable=redefined-outer-name,unused-argument
"""Configuration and fixtures for unit test suite."""
import random

import click
import pytest

from hesslab.calculus import PolyMap
from hesslab.polys import Field, Polynomial, PolynomialContext, parse_poly

SEED = 20201019


@pytest.fixture
def ctx():
    """Return an empty `click.Context` instance."""
    return click.Context(click.Command(name='dummy'))


@pytest.fixture
def run_cli_command():
    """Run a `click` command with the given options.

    The call will raise if the command triggered an exception or the exit code differs from the expected one.
    """

    def _run_cli_command(command, options=None, raises=None, exit_code=0):
        """Run the command and check the result.

        :param command: the command to invoke
        :param options: the list of command line options to pass to the command invocation
        :param raises: optionally an exception class that is expected to be raised
        :param exit_code: the expected exit code, non-zero for verified negative outcomes and errors
        """
        import traceback
        from click.testing import CliRunner

        runner = CliRunner()
        result = runner.invoke(command, options or [])

        if raises is not None:
            assert isinstance(result.exception, raises), result.output
            assert result.exit_code != 0
        elif exit_code:
            assert isinstance(result.exception, SystemExit), result.output
            assert result.exit_code == exit_code, result.output
        else:
            assert result.exception is None, ''.join(traceback.format_exception(*result.exc_info))
            assert result.exit_code == 0, result.output

        result.output_lines = [line.strip() for line in result.output.split('\n') if line.strip()]

        return result

    return _run_cli_command


@pytest.fixture
def rng():
    """Return a seeded random number generator, so property tests are reproducible."""
    return random.Random(SEED)


@pytest.fixture
def get_context():
    """Return a factory for `PolynomialContext` instances with variables ``x1..xn``."""

    def _get_context(n: int = 2, parameters=(), field: Field = Field.Q) -> PolynomialContext:
        return PolynomialContext.standard(n, parameters, field)

    return _get_context


@pytest.fixture
def get_polynomial(get_context):
    """Return a factory for `Polynomial` instances parsed from text."""

    def _get_polynomial(text: str, n: int = 2, parameters=(), field: Field = Field.Q) -> Polynomial:
        """Return the polynomial of the text in the variables ``x1..xn``.

        :param text: the polynomial, for example ``x1*x2 + x1^3``.
        :param n: the number of variables.
        :param parameters: the names of the parameters.
        :param field: the scalar field.
        """
        return parse_poly(text, get_context(n, parameters, field))

    return _get_polynomial


@pytest.fixture
def get_map(get_context):
    """Return a factory for `PolyMap` instances with one component per text."""

    def _get_map(*texts: str, field: Field = Field.Q) -> PolyMap:
        context = get_context(len(texts), field=field)
        return PolyMap([parse_poly(text, context) for text in texts], context)

    return _get_map
