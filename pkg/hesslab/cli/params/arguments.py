# -*- coding: utf-8 -*-
"""Reusable arguments for CLI commands."""
import click

from .types import FixtureParamType

__all__ = ('OverridableArgument', 'POLYNOMIAL', 'FIXTURE')


class OverridableArgument:
    """Wrapper around `click.argument` that allows keyword arguments to be overridden at every use."""

    def __init__(self, *args, **kwargs):
        self.args = args
        self.kwargs = kwargs

    def __call__(self, **kwargs):
        kw_copy = self.kwargs.copy()
        kw_copy.update(kwargs)
        return click.argument(*self.args, **kw_copy)


POLYNOMIAL = OverridableArgument('text', metavar='POLYNOMIAL', type=click.STRING, required=False)

FIXTURE = OverridableArgument('name', metavar='FIXTURE', type=FixtureParamType(), required=False)
