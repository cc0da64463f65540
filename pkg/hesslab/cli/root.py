# -*- coding: utf-8 -*-
"""Command line interface `hesslab`."""
import click

from hesslab.common.log import configure_logging
from hesslab.exceptions import HesslabError
from . import echo
from .params import options
from .utils import INTERNAL_ERROR_CODE


class HesslabGroup(click.Group):
    """Command group that reports exceptions escaping a subcommand with the error exit status."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (click.ClickException, click.Abort, click.exceptions.Exit):
            raise
        except HesslabError as exception:
            echo.echo_critical(f'[{exception.code}] {exception}')
        except Exception as exception:  # pylint: disable=broad-except
            echo.echo_critical(f'[{INTERNAL_ERROR_CODE}] {type(exception).__name__}: {exception}')


@click.group(
    'hesslab',
    cls=HesslabGroup,
    context_settings={
        'help_option_names': ['-h', '--help'],
        'auto_envvar_prefix': 'HESSLAB'
    }
)
@options.VERBOSITY()
def cmd_root(verbosity):
    """Exact computations with polynomials whose Hessian determinant is constant."""
    configure_logging(verbosity.lower())
