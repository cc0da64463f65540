# -*- coding: utf-8 -*-
"""Command line interface utilities."""
from contextlib import contextmanager
import json
import re
import typing

import click
from tabulate import tabulate

from hesslab.calculus import PolyMap
from hesslab.exceptions import HesslabError
from hesslab.polys import Field, Polynomial, PolynomialContext, parse_poly
from . import echo

__all__ = ('INTERNAL_ERROR_CODE', 'attempt', 'read_input', 'load_polynomial', 'load_map', 'format_matrix', 'emit')

RE_VARIABLE = re.compile(r'\bx(\d+)\b')
INTERNAL_ERROR_CODE = 'hesslab.internal_error'


def _report(detail, code: str, include_traceback: bool):
    import sys
    import traceback

    message = f'[{code}] {detail}'
    if include_traceback:
        message += f"\n{''.join(traceback.format_exception(*sys.exc_info()))}"
    echo.echo_critical(message)


@contextmanager
def attempt(message: str = None, exception_types=HesslabError, include_traceback: bool = False):
    """Context manager to be used to wrap statements in CLI that can throw exceptions.

    A caught exception is reported as ``Critical: [<code>] <message>`` and the command exits with status 2. Any other
    exception, except those of ``click`` itself, is reported with the code ``hesslab.internal_error`` and the same
    status.

    :param message: optional message to print before yielding, followed by ``[OK]`` or ``[FAILED]``.
    :param exception_types: the exception types to catch.
    :param include_traceback: boolean, if True, will also print traceback if an exception is caught
    """
    if message is not None:
        echo.echo_info(message, nl=False)

    try:
        yield
    except exception_types as exception:  # pylint: disable=broad-except
        if message is not None:
            echo.echo_highlight(' [FAILED]', color='error', bold=True)
        _report(exception, getattr(exception, 'code', HesslabError.code), include_traceback)
    except (click.ClickException, click.Abort):
        raise
    except Exception as exception:  # pylint: disable=broad-except
        if message is not None:
            echo.echo_highlight(' [FAILED]', color='error', bold=True)
        _report(f'{type(exception).__name__}: {exception}', INTERNAL_ERROR_CODE, include_traceback)
    else:
        if message is not None:
            echo.echo_highlight(' [OK]', color='success', bold=True)


def read_input(text: typing.Optional[str], file) -> str:  # pylint: disable=unsubscriptable-object
    """Return the input text from the positional argument or the ``--file`` option.

    :raises `click.UsageError`: if neither or both are given.
    """
    if (text is None) == (file is None):
        raise click.UsageError('provide the input either as the positional argument or with `--file`, not both.')

    return (text if file is None else file.read()).strip()


def _context(text: str, n: typing.Optional[int], parameters: typing.Sequence[str], field: Field) -> PolynomialContext:  # pylint: disable=unsubscriptable-object
    if n is None:
        n = max((int(index) for index in RE_VARIABLE.findall(text)), default=1)
    return PolynomialContext.standard(n, parameters, field)


def load_polynomial(text: str,
                    n: int = None,
                    parameters: typing.Sequence[str] = (),
                    field: Field = Field.Q) -> Polynomial:
    """Parse a polynomial in ``x1..xn``, inferring ``n`` from the largest variable index when it is not given."""
    return parse_poly(text, _context(text, n, parameters, field))


def load_map(text: str, n: int = None, parameters: typing.Sequence[str] = (), field: Field = Field.Q) -> PolyMap:
    """Parse a polynomial map given as components separated by semicolons."""
    context = _context(text, n, parameters, field)
    components = [component for component in text.split(';') if component.strip()]
    return PolyMap([parse_poly(component, context) for component in components], context)


def format_matrix(rows: typing.Sequence[typing.Sequence[str]]) -> str:
    return tabulate(rows, tablefmt='plain', disable_numparse=True)


def emit(record: dict, output: str, render: typing.Callable[[dict], typing.Iterable[str]]):
    """Print a result record as sorted JSON or through a text renderer yielding lines."""
    if output == 'json':
        echo.echo(json.dumps(record, sort_keys=True, indent=2))
        return

    for line in render(record):
        echo.echo(line)
