# -*- coding: utf-8 -*-
"""Functions to print messages from the command line interface.

Results go to stdout through :func:`echo`; every other message is written to stderr so structured output can be piped.
"""
import enum
import sys

import click

__all__ = ('ExitCode', 'echo', 'echo_info', 'echo_success', 'echo_warning', 'echo_critical', 'echo_highlight')

COLORS = {
    'success': 'green',
    'highlight': 'green',
    'info': 'blue',
    'warning': 'bright_yellow',
    'error': 'red',
    'critical': 'red',
}


class ExitCode(enum.IntEnum):
    """Exit status of a command: a verified negative outcome is distinguished from an error."""

    SUCCESS = 0
    NEGATIVE = 1
    ERROR = 2


def echo(message: str = '', nl: bool = True, err: bool = False):
    click.secho(message, nl=nl, err=err)


def echo_highlight(message: str, nl: bool = True, bold: bool = True, color: str = 'highlight'):
    click.secho(message, bold=bold, nl=nl, fg=COLORS[color], err=True)


def echo_info(message: str, nl: bool = True):
    click.secho('Info: ', fg=COLORS['info'], bold=True, nl=False, err=True)
    click.secho(message, nl=nl, err=True)


def echo_success(message: str):
    click.secho('Success: ', fg=COLORS['success'], bold=True, nl=False, err=True)
    click.secho(message, err=True)


def echo_warning(message: str):
    click.secho('Warning: ', fg=COLORS['warning'], bold=True, nl=False, err=True)
    click.secho(message, err=True)


def echo_critical(message: str, exit_status: ExitCode = ExitCode.ERROR):
    """Print a critical message and exit.

    :param message: the message.
    :param exit_status: the exit status, an error by default.
    """
    click.secho('Critical: ', fg=COLORS['critical'], bold=True, nl=False, err=True)
    click.secho(message, err=True)
    sys.exit(exit_status)
